"""Problem documents: the JSON format the CLI consumes and the fixtures ship in.

A document carries an ordered scale (bottom to top), argument declarations
referencing levels by label, and named options listing their arguments::

    {
      "scale": ["zero", "beta", "lambda"],
      "arguments": [{"name": "pool", "polarity": "pro", "level": "beta"}, ...],
      "options": {"a": ["pool", ...], ...}
    }

Two-sided declarations (``"polarity": "both"``) are split into a pro and a
con of equal importance before the universe is built.  Parsing then
serializing a problem and parsing again yields identical values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .core import (
    Argument,
    ArgumentDecl,
    BOTH,
    DecisionUniverse,
    ImportanceScale,
    OptionProfile,
    Polarity,
    ProblemError,
    ValidationReport,
    Violation,
    duplicate_both_polarity,
)

FIXTURES = ("luc", "lucy", "luka")

_POLARITIES = (Polarity.PRO.value, Polarity.CON.value, BOTH)


class ProblemFormatError(ProblemError):
    """The document does not parse into a valid problem; message says where."""


@dataclass(frozen=True)
class Problem:
    universe: DecisionUniverse
    options: Mapping[str, OptionProfile]

    def option(self, name: str) -> OptionProfile:
        try:
            return self.options[name]
        except KeyError:
            raise ProblemFormatError(f"unknown option {name!r}") from None


def _fail(where: str, message: str):
    raise ProblemFormatError(f"{where}: {message}")


def _expanded_arguments(scale: ImportanceScale, raw_args) -> list[Argument]:
    expanded: list[Argument] = []
    for i, entry in enumerate(raw_args):
        where = f"arguments[{i}]"
        if not isinstance(entry, dict):
            _fail(where, "expected an object")
        for key in ("name", "polarity", "level"):
            if key not in entry:
                _fail(where, f"missing field {key!r}")
        name, polarity, level = entry["name"], entry["polarity"], entry["level"]
        if not isinstance(name, str) or not name:
            _fail(f"{where}.name", "expected a non-empty string")
        if polarity not in _POLARITIES:
            _fail(f"{where}.polarity", f"expected one of {_POLARITIES}, got {polarity!r}")
        if not isinstance(level, str):
            _fail(f"{where}.level", "levels are referenced by label")
        if level not in scale.levels:
            _fail(f"{where}.level", f"unknown level label {level!r}")
        decl = ArgumentDecl(name, polarity, scale.index(level))
        expanded.extend(duplicate_both_polarity(decl))
    return expanded


def _parse_scale(data) -> ImportanceScale:
    raw_scale = data.get("scale")
    if not isinstance(raw_scale, list) or not all(isinstance(s, str) for s in raw_scale):
        _fail("scale", "expected a list of level labels, bottom first")
    if len(raw_scale) < 2:
        _fail("scale", "need at least two levels (the null level plus one)")
    if len(set(raw_scale)) != len(raw_scale):
        _fail("scale", "level labels must be distinct")
    return ImportanceScale(tuple(raw_scale))


def parse_problem(data: dict, source: str = "<data>") -> Problem:
    """Build a problem from a parsed JSON document.

    Raises :class:`ProblemFormatError` with a positioned message on any
    structural defect.  Triviality is *not* an error here: loading a
    trivial problem is allowed, auditing it is not.
    """
    if not isinstance(data, dict):
        _fail(source, "expected a JSON object at the top level")
    scale = _parse_scale(data)

    raw_args = data.get("arguments")
    if not isinstance(raw_args, list):
        _fail("arguments", "expected a list of argument declarations")
    expanded = _expanded_arguments(scale, raw_args)
    seen: set[str] = set()
    for arg in expanded:
        if arg.name in seen:
            _fail("arguments", f"duplicate argument name {arg.name!r}")
        seen.add(arg.name)
    universe = DecisionUniverse(scale, tuple(expanded))

    raw_options = data.get("options", {})
    if not isinstance(raw_options, dict):
        _fail("options", "expected an object mapping option names to member lists")
    options: dict[str, OptionProfile] = {}
    for name, members in raw_options.items():
        where = f"options.{name}"
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            _fail(where, "expected a list of argument names")
        if len(set(members)) != len(members):
            _fail(where, "an option lists each argument at most once")
        unknown = set(members) - seen
        if unknown:
            _fail(where, f"unknown arguments: {sorted(unknown)}")
        options[name] = universe.option(members)
    return Problem(universe, options)


def load_problem(path: str | Path) -> Problem:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise ProblemFormatError(f"{path}: {exc}") from exc
    return parse_problem(data, source=str(path))


def serialize_problem(problem: Problem) -> dict:
    """Document form of a problem; ``parse_problem`` inverts it exactly."""
    universe = problem.universe
    return {
        "scale": list(universe.scale.levels),
        "arguments": [
            {
                "name": a.name,
                "polarity": a.polarity.value,
                "level": universe.scale.label(a.level),
            }
            for a in universe.arguments
        ],
        "options": {
            name: sorted(profile.members)
            for name, profile in problem.options.items()
        },
    }


def validate_document(data: dict) -> ValidationReport:
    """Collect validation findings from a raw document without failing fast.

    Structural defects surface as ``ParseError`` violations; on a
    structurally sound document the universe-level findings (duplicate
    names, triviality) are reported with their own codes.
    """
    violations: list[Violation] = []
    try:
        scale = _parse_scale(data if isinstance(data, dict) else {})
        raw_args = data.get("arguments")
        if not isinstance(raw_args, list):
            _fail("arguments", "expected a list of argument declarations")
        expanded = _expanded_arguments(scale, raw_args)
    except ProblemFormatError as exc:
        violations.append(Violation("ParseError", str(exc)))
        return ValidationReport(tuple(violations))

    seen: set[str] = set()
    for arg in expanded:
        if arg.name in seen:
            violations.append(
                Violation("DuplicateName", f"argument {arg.name!r} declared twice")
            )
        seen.add(arg.name)
    if all(arg.is_null for arg in expanded):
        violations.append(
            Violation("TrivialUniverse", "every argument has null importance")
        )

    raw_options = data.get("options", {})
    if not isinstance(raw_options, dict):
        violations.append(Violation("ParseError", "options: expected an object"))
        return ValidationReport(tuple(violations))
    for name, members in raw_options.items():
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            violations.append(
                Violation("ParseError", f"options.{name}: expected a list of names")
            )
            continue
        if len(set(members)) != len(members):
            violations.append(
                Violation("ParseError", f"options.{name}: repeated member")
            )
        unknown = sorted(set(members) - seen)
        if unknown:
            violations.append(
                Violation("ParseError", f"options.{name}: unknown arguments {unknown}")
            )
    return ValidationReport(tuple(violations))


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled example problem (``luc``, ``lucy``, ``luka``)."""
    stem = name.removesuffix(".json")
    if stem not in FIXTURES:
        raise ProblemFormatError(f"no bundled fixture named {name!r}")
    return Path(str(resources.files("proscons") / "fixtures" / f"{stem}.json"))


def load_fixture(name: str) -> Problem:
    return load_problem(fixture_path(name))
