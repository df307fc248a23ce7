# Copyright 2026 The kred authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact complete reductions in the K- and KO-rings of odd-prime lens spaces.

All arithmetic is exact: big values come back as python ints, rationals as
fractions.Fraction.
"""

try:
    from ._kred import *  # noqa: F401,F403  (installed package layout)
    from ._kred import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree builds put _kred on sys.path
    from _kred import *  # noqa: F401,F403
    from _kred import __version__  # noqa: F401
