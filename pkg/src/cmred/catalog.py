"""Group construction: cycle-notation parsing, named constructors, group files.

Group spec grammar (recursive; ``product`` takes exactly two operands)::

    spec := "cyclic:" N | "dihedral:" N | "symmetric:" N | "alternating:" N
          | "product:" spec "," spec | "wreath-c2:" spec
          | "builtin:" NAME | "file:" PATH | "generators:" PERMS

Permutation lists use 1-based cycle notation, e.g. ``(2,7)(3,4,8,9);(1,4,3,8)``,
optionally prefixed by ``deg=N;`` to raise the degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .perm import DEFAULT_ORDER_CAP, CapacityError, Permutation, central_involutions, generate_group


class ParseError(ValueError):
    def __init__(self, message, offset=None, text=None):
        self.offset = offset
        self.text = text
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class _Cursor:
    def __init__(self, text, pos=0):
        self.text = text
        self.pos = pos

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos, self.text)
        self.pos += 1

    def integer(self):
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        if token in ("", "-"):
            raise ParseError("expected an integer", start, self.text)
        value = int(token)
        if value < 1:
            raise ParseError(f"point {value} is not positive", start, self.text)
        return value, start


def _parse_perm_cycles(cur):
    """One permutation: ``()`` or a run of cycles.  Returns list of cycles."""
    cycles = []
    cur.expect("(")
    if cur.peek() == ")":
        cur.pos += 1
        return cycles
    while True:
        start = cur.pos - 1
        first, _ = cur.integer()
        cyc = [first]
        seen = {first}
        while cur.peek() == ",":
            cur.pos += 1
            x, at = cur.integer()
            if x in seen:
                raise ParseError(f"point {x} repeated within a cycle", at, cur.text)
            seen.add(x)
            cyc.append(x)
        cur.expect(")")
        if len(cyc) < 2:
            raise ParseError("a cycle needs at least two points", start, cur.text)
        cycles.append(tuple(cyc))
        if cur.peek() != "(":
            return cycles
        cur.pos += 1


def parse_cycles(text, degree=None):
    """Parse ``;``-separated permutations in cycle notation.

    All results share one degree: the largest point mentioned, or the
    ``deg=N`` header / ``degree`` argument if larger.  Cycles within one
    permutation are applied left to right.
    """
    cur = _Cursor(text)
    cur.skip_ws()
    if text.startswith("deg=", cur.pos):
        cur.pos += 4
        value, _ = cur.integer()
        degree = max(degree or 0, value)
        if cur.peek() not in (";", ""):
            raise ParseError("expected ';' after deg= header", cur.pos, text)
        if cur.peek() == ";":
            cur.pos += 1
    raw = []
    if cur.peek() == "" and degree is None:
        raise ParseError("no permutations given", cur.pos, text)
    while cur.peek() != "":
        raw.append(_parse_perm_cycles(cur))
        if cur.peek() == ";":
            cur.pos += 1
            if cur.peek() == "":
                raise ParseError("trailing ';'", cur.pos, text)
        elif cur.peek() != "":
            raise ParseError(f"unexpected {cur.peek()!r}", cur.pos, text)
    top = max((x for cycles in raw for c in cycles for x in c), default=1)
    n = max(top, degree or 1)
    return [Permutation.from_cycles(cycles, n) for cycles in raw]


def format_perms(perms):
    return ";".join(str(p) for p in perms)


def _cyclic(n):
    if n < 1:
        raise ParseError(f"cyclic:{n} needs n >= 1")
    if n == 1:
        return [], 1
    return [Permutation.from_cycles([tuple(range(1, n + 1))], n)], n


def _dihedral(n):
    if n < 6 or n % 2:
        raise ParseError(
            f"dihedral:{n} needs an even order >= 6 (use product:cyclic:2,cyclic:2 for order 4)")
    k = n // 2
    rot = Permutation.from_cycles([tuple(range(1, k + 1))], k)
    refl = Permutation.from_cycles([(i, k + 1 - i) for i in range(1, k // 2 + 1)], k)
    return [rot, refl], k


def _symmetric(n):
    if n < 1:
        raise ParseError(f"symmetric:{n} needs n >= 1")
    if n == 1:
        return [], 1
    if n == 2:
        return [Permutation.from_cycles([(1, 2)], 2)], 2
    return [Permutation.from_cycles([(1, 2)], n),
            Permutation.from_cycles([tuple(range(1, n + 1))], n)], n


def _alternating(n):
    if n < 1:
        raise ParseError(f"alternating:{n} needs n >= 1")
    if n < 3:
        return [], n
    gens = [Permutation.from_cycles([(1, 2, 3)], n)]
    if n > 3:
        long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles([long], n))
    return gens, n


def _shift(p, offset, degree):
    images = list(range(degree))
    for i, x in enumerate(p.images):
        images[i + offset] = x + offset
    return Permutation(tuple(images))


def direct_product(gens_a, deg_a, gens_b, deg_b):
    """Generators of ``A x B`` acting on disjoint supports."""
    n = deg_a + deg_b
    return [_shift(p, 0, n) for p in gens_a] + [_shift(p, deg_a, n) for p in gens_b], n


def wreath_c2(gens_h, k):
    """Generators of ``C2 wr H`` on ``2k`` points; point ``i`` pairs with ``i + k``."""
    n = 2 * k
    flips = [Permutation.from_cycles([(i, i + k)], n) for i in range(1, k + 1)]
    lifted = []
    for h in gens_h:
        images = list(h.images) + [x + k for x in h.images]
        lifted.append(Permutation(tuple(images)))
    return flips + lifted, n


G40_12_GENERATORS = "deg=10;(2,7)(3,4,8,9);(1,4,3,8)"

# name -> (spec text, caveat)
BUILTINS = {
    "G40_12": ("generators:" + G40_12_GENERATORS,
               "generators taken verbatim from the worked g = 5 example"),
    "G2_1": ("cyclic:2", ""),
    "G4_1": ("cyclic:4", ""),
    "G8_3": ("dihedral:8", "dihedral group of order 8"),
    "G6_2": ("cyclic:6", ""),
    "G12_4": ("dihedral:12", "dihedral group of order 12"),
    "G24_13": ("product:alternating:4,cyclic:2", "A4 x C2"),
    "G48_48": ("wreath-c2:symmetric:3", "C2 wr S3"),
    "G10_2": ("cyclic:10", ""),
    "G20_4": ("dihedral:20", "dihedral group of order 20"),
    "G384_5602": ("wreath-c2:symmetric:4", "assumed to be C2 wr S4; not verified"),
    "G3840": ("wreath-c2:symmetric:5",
              "assumed to be C2 wr S5; not verified; needs explicit Delta (best-effort)"),
}

_NUMERIC = {"cyclic", "dihedral", "symmetric", "alternating"}
_KINDS = _NUMERIC | {"product", "wreath-c2", "builtin", "file", "generators"}


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: tuple

    def __str__(self):
        if self.kind == "product":
            return f"product:{self.params[0]},{self.params[1]}"
        if self.kind == "wreath-c2":
            return f"wreath-c2:{self.params[0]}"
        return f"{self.kind}:{self.params[0]}"


def _scan_atom(text, pos, allow_parens):
    """Read until a top-level comma; commas inside parentheses do not count."""
    depth = 0
    start = pos
    while pos < len(text):
        ch = text[pos]
        if allow_parens and ch == "(":
            depth += 1
        elif allow_parens and ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            break
        pos += 1
    return text[start:pos], pos


def _parse_spec_at(text, pos):
    colon = text.find(":", pos)
    if colon < 0:
        raise ParseError(f"expected '<kind>:' in group spec {text!r}", pos, text)
    kind = text[pos:colon].strip()
    if kind not in _KINDS:
        raise ParseError(f"unknown group kind {kind!r}", pos, text)
    pos = colon + 1
    if kind in _NUMERIC:
        token, end = _scan_atom(text, pos, False)
        if not token.strip().isdigit():
            raise ParseError(f"{kind} needs a positive integer, got {token!r}", pos, text)
        return GroupSpec(kind, (int(token),)), end
    if kind == "product":
        left, pos = _parse_spec_at(text, pos)
        if pos >= len(text) or text[pos] != ",":
            raise ParseError("product needs two comma-separated factors", pos, text)
        right, pos = _parse_spec_at(text, pos + 1)
        return GroupSpec(kind, (left, right)), pos
    if kind == "wreath-c2":
        inner, pos = _parse_spec_at(text, pos)
        return GroupSpec(kind, (inner,)), pos
    token, end = _scan_atom(text, pos, kind == "generators")
    token = token.strip()
    if not token:
        raise ParseError(f"{kind} needs an argument", pos, text)
    if kind == "builtin" and token not in BUILTINS:
        raise ParseError(f"unknown builtin {token!r}; known: {', '.join(BUILTINS)}", pos, text)
    if kind == "generators":
        try:
            parse_cycles(token)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at offset", 1)[0],
                             None if exc.offset is None else pos + exc.offset, text) from None
    return GroupSpec(kind, (token,)), end


def parse_group_spec(text):
    spec, pos = _parse_spec_at(text, 0)
    if pos != len(text):
        raise ParseError("trailing text after group spec", pos, text)
    return spec


def parse_group_spec_list(text):
    """Comma-separated specs; ``product`` binds exactly two operands."""
    specs = []
    pos = 0
    while True:
        spec, pos = _parse_spec_at(text, pos)
        specs.append(spec)
        if pos == len(text):
            return specs
        if text[pos] != ",":
            raise ParseError("expected ',' between group specs", pos, text)
        pos += 1


def load_group_file(path):
    """Read ``{"degree": n, "generators": [...], "label": "..."}``."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        degree = int(data["degree"])
        gens = [p for text in data["generators"] for p in parse_cycles(text, degree)]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed group file {path}: {exc}") from None
    top = max((p.degree for p in gens), default=degree)
    if top > degree:
        raise ParseError(f"group file {path}: generator moves a point beyond degree {degree}")
    return gens, degree, str(data.get("label", Path(path).stem))


def save_group_file(path, group, label):
    data = {"degree": group.degree,
            "generators": [str(p) for p in group.generators],
            "label": label}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def _generators(spec):
    """``(generators, degree)`` for a spec."""
    kind, params = spec.kind, spec.params
    if kind == "cyclic":
        return _cyclic(params[0])
    if kind == "dihedral":
        return _dihedral(params[0])
    if kind == "symmetric":
        return _symmetric(params[0])
    if kind == "alternating":
        return _alternating(params[0])
    if kind == "product":
        ga, da = _generators(params[0])
        gb, db = _generators(params[1])
        return direct_product(ga, da, gb, db)
    if kind == "wreath-c2":
        gh, k = _generators(params[0])
        return wreath_c2(gh, k)
    if kind == "builtin":
        return _generators(parse_group_spec(BUILTINS[params[0]][0]))
    if kind == "file":
        gens, degree, _ = load_group_file(params[0])
        return gens, degree
    if kind == "generators":
        gens = parse_cycles(params[0])
        return gens, gens[0].degree
    raise ParseError(f"unknown group kind {kind!r}")


def group_label(spec):
    if spec.kind == "file":
        return load_group_file(spec.params[0])[2]
    return str(spec)


def build_group(spec, order_cap=DEFAULT_ORDER_CAP):
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    gens, degree = _generators(spec)
    return generate_group(gens, order_cap=order_cap, degree=degree)


def list_groups():
    """Catalog rows: ``(name, spec text, order, central involutions, caveat)``."""
    rows = []
    for name, (text, caveat) in BUILTINS.items():
        order = None
        n_inv = None
        try:
            G = build_group(text, order_cap=400)
            order = G.order
            n_inv = len(central_involutions(G))
        except CapacityError:
            pass
        rows.append((name, text, order, n_inv, caveat))
    return rows
