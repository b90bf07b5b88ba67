# Copyright 2026 The matchcore Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact core analysis of matching games."""

import json
import pathlib
from fractions import Fraction

from ._matchcore import CapExceeded, Game, InputError, commands, run_command

__all__ = [
    "CapExceeded",
    "Game",
    "InputError",
    "commands",
    "data_dir",
    "load_instance",
    "run",
    "worth",
    "check_core",
]


def data_dir():
    """Directory of the bundled instances shipped with the package, if any."""
    packaged = pathlib.Path(__file__).parent / "instances"
    return packaged if packaged.is_dir() else None


def load_instance(name):
    """Loads a bundled instance such as "example2" or "k3"."""
    root = data_dir()
    if root is None:
        raise FileNotFoundError("no bundled instances in this install")
    return Game.from_file(str(root / f"{name}.game"))


def run(command, game=None, imputation=None, **options):
    """Runs a command and returns (report dict, exit code).

    `imputation` may be a sequence of ints, floats, Fractions or strings.
    Floats are read through their shortest decimal form, so 0.1 means 1/10.
    """
    if imputation is not None and not isinstance(imputation, str):
        imputation = ",".join(_exact(p) for p in imputation)
    if command == "examples" and "data_dir" not in options and data_dir():
        options["data_dir"] = str(data_dir())
    text, code = run_command(command, game, imputation, **options)
    return json.loads(text), code


def _exact(value):
    if isinstance(value, float):
        value = repr(value)
    return str(Fraction(value))


def worth(game):
    """The grand coalition's worth as a Fraction, or None if infeasible."""
    report, _ = run("worth", game)
    if "error" in report:
        raise InputError(report["error"])
    value = report["worth"]["worth"]
    return None if value is None else Fraction(value)


def check_core(game, profits):
    """Exact core verdict for `profits` given in game.vertices order."""
    report, code = run("check", game, profits)
    if "error" in report:
        raise InputError(report["error"])
    return report["check"]["verdict"]
