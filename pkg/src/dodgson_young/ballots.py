"""Ballot files: a plain native format and PrefLib strict-order-complete (.soc).

Native format::

    # comments start with '#'
    m n
    <m candidate ids, most preferred first>   (n lines)
"""

from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Optional, Union

from .profile import Profile, build_profile
from .validation import check_ranking

PathLike = Union[str, os.PathLike]


class BallotFormatError(ValueError):
    def __init__(self, path, lineno: Optional[int], message: str):
        self.path = str(path)
        self.lineno = lineno
        where = f"{self.path}:{lineno}" if lineno else self.path
        super().__init__(f"{where}: {message}")


def _int_fields(text: str, path, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise BallotFormatError(path, lineno, f"non-integer token in {text.strip()!r}") from None


def parse_native(text: str, path="<string>") -> Profile:
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)]
    lines = [(i, s) for i, s in lines if s and not s.startswith("#")]
    if not lines:
        raise BallotFormatError(path, None, "empty ballot file")
    header_no, header = lines[0]
    fields = _int_fields(header, path, header_no)
    if len(fields) != 2:
        raise BallotFormatError(path, header_no, "header must be 'm n'")
    m, n = fields
    if m < 1 or n < 1:
        raise BallotFormatError(path, header_no, "need m >= 1 and n >= 1")
    body = lines[1:]
    if len(body) != n:
        raise BallotFormatError(path, body[-1][0] if len(body) > n else None,
                                f"header declares {n} ballots, found {len(body)}")
    rows = []
    for lineno, s in body:
        row = _int_fields(s, path, lineno)
        try:
            rows.append(check_ranking(row, m, where="ballot"))
        except ValueError as exc:
            raise BallotFormatError(path, lineno, str(exc)) from None
    return build_profile(rows, m)


_SOC_LINE = re.compile(r"^(\d+)\s*:\s*(.+)$")
_META = re.compile(r"^#\s*([A-Z][A-Z ]*?)\s*:\s*(.*)$")


def parse_soc(text: str, path="<string>") -> Profile:
    """Parse a PrefLib ``.soc`` file, expanding multiplicities in file order."""
    meta: dict[str, str] = {}
    alternative_names = 0
    rows: list[tuple[int, ...]] = []
    m: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("#"):
            hit = _META.match(s)
            if hit:
                key = hit.group(1)
                if key.startswith("ALTERNATIVE NAME"):
                    alternative_names += 1
                else:
                    meta[key] = hit.group(2).strip()
            continue
        hit = _SOC_LINE.match(s)
        if not hit:
            raise BallotFormatError(path, lineno, f"expected 'count: c1,...,cm', got {s!r}")
        count = int(hit.group(1))
        try:
            order = [int(tok) for tok in hit.group(2).split(",")]
        except ValueError:
            raise BallotFormatError(path, lineno, "non-integer candidate") from None
        if m is None:
            m = int(meta.get("NUMBER ALTERNATIVES", alternative_names or len(order)))
        try:
            ranking = check_ranking(order, m, where="ballot")
        except ValueError as exc:
            raise BallotFormatError(path, lineno, str(exc)) from None
        rows.extend([ranking] * count)
    if not rows:
        raise BallotFormatError(path, None, "no ballots")
    declared = meta.get("NUMBER VOTERS")
    if declared is not None and int(declared) != len(rows):
        raise BallotFormatError(path, None,
                                f"header declares {declared} voters, found {len(rows)}")
    return build_profile(rows, m)


def parse_profile(path: PathLike, format: Optional[str] = None) -> Profile:
    """Read a ballot file; ``format`` defaults to 'soc' for ``.soc`` files, else 'native'."""
    path = Path(path)
    if format is None:
        format = "soc" if path.suffix.lower() == ".soc" else "native"
    text = path.read_text()
    if format == "native":
        return parse_native(text, path)
    if format == "soc":
        return parse_soc(text, path)
    raise ValueError(f"unknown ballot format {format!r}")


def format_native(profile: Profile) -> str:
    lines = [f"{profile.m} {profile.n_live}"]
    lines += [" ".join(map(str, r)) for _, r in profile.items()]
    return "\n".join(lines) + "\n"


def write_native(profile: Profile, path: PathLike) -> None:
    Path(path).write_text(format_native(profile))
