"""Text formats: ``.ssys`` set systems, ``.mat`` 0/1 matrices, ``.pts`` rational
points and ``.lin`` linear family tables."""

from __future__ import annotations

import json
from fractions import Fraction

from .core import Domain, SetSystem, bitstring, from_bitstring
from .errors import ParseError, VCSetsError


def _strip_comment(line: str) -> str:
    pos = line.find("#")
    return line if pos < 0 else line[:pos]


def _col(raw: str, token: str, start: int = 0) -> int:
    return raw.find(token, start) + 1


def parse_ssys(text: str) -> SetSystem:
    domain: Domain | None = None
    names: dict[str, int] = {}
    seen: dict[int, int] = {}
    masks: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if domain is None:
            head, sep, rest = line.partition(":")
            if head.strip() != "domain" or not sep:
                raise ParseError("expected 'domain: e1 e2 ...'", lineno, _col(raw, line.strip()[:1]))
            ids = rest.split()
            if not ids:
                raise ParseError("empty domain", lineno, len(raw) + 1)
            offset = len(head) + 1
            seen_ids = set()
            for e in ids:
                col = raw.find(e, offset) + 1
                offset = col + len(e) - 1
                if e in seen_ids:
                    raise ParseError(f"duplicate element {e!r}", lineno, col)
                seen_ids.add(e)
            domain = Domain(tuple(ids))
            continue
        head, sep, rest = line.partition(":")
        words = head.split()
        if not sep or len(words) != 2 or words[0] != "concept":
            raise ParseError("expected 'concept NAME: elements' or 'concept NAME: -'",
                             lineno, _col(raw, line.strip()[:1]))
        name = words[1]
        if name in names:
            raise ParseError(f"duplicate concept name {name!r} (first at line {names[name]})",
                             lineno, _col(raw, name))
        names[name] = lineno
        items = rest.split()
        offset = len(head) + 1
        mask = 0
        if items != ["-"]:
            for item in items:
                col = raw.find(item, offset) + 1
                offset = col + len(item) - 1
                if item == "-":
                    raise ParseError("'-' must stand alone", lineno, col)
                try:
                    bit = 1 << domain.index(item)
                except VCSetsError:
                    raise ParseError(f"unknown element {item!r}", lineno, col) from None
                if mask & bit:
                    raise ParseError(f"element {item!r} repeated", lineno, col)
                mask |= bit
        if mask in seen:
            raise ParseError(
                f"duplicate concept contents at line {lineno} (same as line {seen[mask]})",
                lineno, _col(raw, name))
        seen[mask] = lineno
        masks.append(mask)
    if domain is None:
        raise ParseError("missing domain line", 1)
    if not masks:
        raise ParseError("no concepts: the empty family is not allowed", lineno + 1 if text else 1)
    return SetSystem.from_masks(domain, masks)


def serialize_ssys(system: SetSystem) -> str:
    lines = ["domain: " + " ".join(system.domain.elements)]
    for j, c in enumerate(system.concepts):
        members = system.domain.members(c)
        lines.append(f"concept c{j}: " + (" ".join(members) if members else "-"))
    return "\n".join(lines) + "\n"


def parse_mat(text: str, elements: tuple[str, ...] | None = None) -> SetSystem:
    rows = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if header is None:
            try:
                fields = dict(tok.split("=", 1) for tok in line.split())
                header = (int(fields["concepts"]), int(fields["elements"]))
            except (ValueError, KeyError):
                raise ParseError("expected 'concepts=<m> elements=<n>'", lineno) from None
            continue
        m, n = header
        if len(line) != n:
            raise ParseError(f"row has {len(line)} columns, expected {n}", lineno,
                             min(len(line), n) + 1)
        bad = next((k for k, ch in enumerate(line) if ch not in "01"), None)
        if bad is not None:
            raise ParseError(f"invalid character {line[bad]!r}", lineno, raw.find(line) + bad + 1)
        mask = from_bitstring(line)
        if any(mask == r for r, _ in rows):
            first = next(ln for r, ln in rows if r == mask)
            raise ParseError(
                f"duplicate concept contents at line {lineno} (same as line {first})", lineno)
        rows.append((mask, lineno))
    if header is None:
        raise ParseError("missing header line", 1)
    m, n = header
    if len(rows) != m:
        raise ParseError(f"header announces {m} concepts, found {len(rows)}", lineno)
    if not rows:
        raise ParseError("no concepts: the empty family is not allowed", lineno)
    if elements is None:
        elements = tuple(str(i + 1) for i in range(n))
    return SetSystem.from_masks(elements, [r for r, _ in rows])


def serialize_mat(system: SetSystem) -> str:
    lines = [f"concepts={len(system)} elements={system.n}"]
    lines.extend(bitstring(c, system.n) for c in system.concepts)
    return "\n".join(lines) + "\n"


def system_to_json(system: SetSystem) -> dict:
    return {
        "domain": list(system.domain.elements),
        "concepts": [list(system.domain.members(c)) for c in system.concepts],
    }


def serialize_json(system: SetSystem) -> str:
    return json.dumps(system_to_json(system), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> SetSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    try:
        domain = Domain(tuple(data["domain"]))
        masks = [domain.mask(c) for c in data["concepts"]]
    except (KeyError, TypeError, VCSetsError) as exc:
        raise ParseError(f"invalid set-system JSON: {exc}", 1) from None
    if len(set(masks)) != len(masks):
        raise ParseError("duplicate concept contents", 1)
    if not masks:
        raise ParseError("no concepts: the empty family is not allowed", 1)
    return SetSystem.from_masks(domain, masks)


def parse_system(text: str, fmt: str | None = None) -> SetSystem:
    """Parse any supported set-system format, sniffing it when ``fmt`` is None."""
    if fmt is None:
        first = next((_strip_comment(l).strip() for l in text.splitlines()
                      if _strip_comment(l).strip()), "")
        if first.startswith("{"):
            fmt = "json"
        elif first.startswith("concepts="):
            fmt = "mat"
        else:
            fmt = "ssys"
    if fmt == "ssys":
        return parse_ssys(text)
    if fmt == "mat":
        return parse_mat(text)
    if fmt == "json":
        return parse_json(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_system(system: SetSystem, fmt: str = "ssys") -> str:
    return {"ssys": serialize_ssys, "mat": serialize_mat, "json": serialize_json}[fmt](system)


def parse_rational(token: str, lineno: int = 1, column: int = 1) -> Fraction:
    try:
        num, sep, den = token.partition("/")
        value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid rational {token!r}", lineno, column) from None
    if sep and int(den) <= 0:
        raise ParseError(f"denominator must be positive in {token!r}", lineno, column)
    return value


def parse_pts(text: str) -> list[tuple[Fraction, Fraction]]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        toks = line.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise ParseError("expected 'x y' with rational coordinates", lineno, _col(raw, toks[0]))
        x = parse_rational(toks[0], lineno, _col(raw, toks[0]))
        y = parse_rational(toks[1], lineno, _col(raw, toks[1], raw.find(toks[0]) + len(toks[0])))
        if (x, y) in points:
            raise ParseError(f"duplicate point ({x}, {y})", lineno, _col(raw, toks[0]))
        points.append((x, y))
    if not points:
        raise ParseError("no points", 1)
    return points


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def serialize_pts(points) -> str:
    return "".join(f"{_fmt_q(x)} {_fmt_q(y)}\n" for x, y in points)


def parse_lin(text: str) -> tuple[list[Fraction], list[list[Fraction]]]:
    """``.lin`` rows read ``f0 : h1 h2 ... hn``, one row per point."""
    f0, rows = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        left, sep, right = line.partition(":")
        if not sep:
            raise ParseError("expected 'f0 : h1 ... hn'", lineno)
        f0.append(parse_rational(left.strip(), lineno, _col(raw, left.strip())))
        toks = right.split()
        if not toks:
            raise ParseError("no basis values", lineno, len(raw) + 1)
        rows.append([parse_rational(t, lineno, _col(raw, t, len(left) + 1)) for t in toks])
        if len(rows[-1]) != len(rows[0]):
            raise ParseError(f"row has {len(rows[-1])} basis values, expected {len(rows[0])}",
                             lineno)
    if not rows:
        raise ParseError("empty linear family", 1)
    return f0, rows
