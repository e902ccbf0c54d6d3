"""Line-oriented readers and writers for the three structure file kinds.

Lattice files:   `lattice NAME`, `elem NAME`, `cover LOWER UPPER`
Group files:     `group NAME`, `degree N`, `gen CYCLES`
L-subset files:  `lsubset NAME`, `over group G lattice L`,
                 `default ELEM`, `val CYCLES ELEM`
`#` starts a comment; blank lines are ignored.  The identity permutation
is spelled `()`.  Elements missing from an L-subset file take the default.
"""

from collections import Counter

from .errors import LGroupError, ParseError, ValidationError
from .group import FiniteGroup, format_cycles, group_from_generators, parse_cycles
from .lattice import build_lattice
from .lsub import LSubset


def _lines(text, source):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_lattice(text, source="<lattice>"):
    name = None
    elems = []
    covers = []
    for lineno, line in _lines(text, source):
        parts = line.split()
        key = parts[0]
        if key == "lattice" and len(parts) == 2:
            if name is not None:
                raise ParseError(source, lineno, "duplicate lattice header")
            name = parts[1]
        elif key == "elem" and len(parts) == 2:
            elems.append(parts[1])
        elif key == "cover" and len(parts) == 3:
            covers.append((parts[1], parts[2]))
        else:
            raise ParseError(source, lineno, f"unrecognized lattice line: {line!r}")
    if name is None:
        raise ParseError(source, 1, "missing `lattice NAME` header")
    return build_lattice(elems, covers, name=name)


def dump_lattice(lattice):
    out = [f"lattice {lattice.name}"]
    out += [f"elem {e.name}" for e in lattice.elements]
    out += [
        f"cover {lattice.elements[lo].name} {lattice.elements[hi].name}"
        for lo, hi in lattice.covers
    ]
    return "\n".join(out) + "\n"


def parse_group(text, source="<group>", max_order=None):
    name = None
    degree = None
    gens = []
    for lineno, line in _lines(text, source):
        parts = line.split(None, 1)
        key = parts[0]
        if key == "group" and len(parts) == 2:
            if name is not None:
                raise ParseError(source, lineno, "duplicate group header")
            name = parts[1].strip()
        elif key == "degree" and len(parts) == 2:
            try:
                degree = int(parts[1])
            except ValueError:
                raise ParseError(source, lineno, f"bad degree: {parts[1]!r}") from None
            if degree < 1:
                raise ParseError(source, lineno, "degree must be positive")
        elif key == "gen":
            if degree is None:
                raise ParseError(source, lineno, "`gen` before `degree`")
            body = parts[1] if len(parts) == 2 else ""
            try:
                gens.append(parse_cycles(body, degree))
            except LGroupError as exc:
                raise ParseError(source, lineno, str(exc)) from None
        else:
            raise ParseError(source, lineno, f"unrecognized group line: {line!r}")
    if name is None or degree is None:
        raise ParseError(source, 1, "missing `group NAME` or `degree N` header")
    kwargs = {} if max_order is None else {"max_order": max_order}
    return group_from_generators(degree, gens, name=name, **kwargs)


def dump_group(G):
    out = [f"group {G.name}", f"degree {G.degree}"]
    out += [f"gen {format_cycles(g)}" for g in G.gens]
    return "\n".join(out) + "\n"


def parse_lsubset(text, group, lattice, source="<lsubset>"):
    """Returns (name, LSubset) over the given carriers; the `over` line
    must reference their names."""
    name = None
    default = None
    seen_over = False
    assigned = {}
    for lineno, line in _lines(text, source):
        parts = line.split()
        key = parts[0]
        if key == "lsubset" and len(parts) == 2:
            if name is not None:
                raise ParseError(source, lineno, "duplicate lsubset header")
            name = parts[1]
        elif key == "over" and len(parts) == 5 and parts[1] == "group" and parts[3] == "lattice":
            seen_over = True
            if parts[2] != group.name:
                raise ValidationError(
                    f"{source}:{lineno}: valuation is over group {parts[2]!r}, "
                    f"loaded group is {group.name!r}"
                )
            if parts[4] != lattice.name:
                raise ValidationError(
                    f"{source}:{lineno}: valuation is over lattice {parts[4]!r}, "
                    f"loaded lattice is {lattice.name!r}"
                )
        elif key == "default" and len(parts) == 2:
            try:
                default = lattice.element(parts[1])
            except LGroupError as exc:
                raise ParseError(source, lineno, str(exc)) from None
        elif key == "val":
            body = line[len("val"):].strip()
            cycles, _, elem_name = body.rpartition(" ")
            if not cycles:
                raise ParseError(source, lineno, f"val needs cycles and a value: {line!r}")
            try:
                x = group.element(cycles.strip())
                v = lattice.element(elem_name.strip())
            except LGroupError as exc:
                raise ParseError(source, lineno, str(exc)) from None
            if x.id in assigned:
                raise ValidationError(
                    f"{source}:{lineno}: value for {x!r} assigned twice"
                )
            assigned[x.id] = v.id
        else:
            raise ParseError(source, lineno, f"unrecognized lsubset line: {line!r}")
    if name is None:
        raise ParseError(source, 1, "missing `lsubset NAME` header")
    if not seen_over:
        raise ParseError(source, 1, "missing `over group G lattice L` line")
    if default is None and len(assigned) < group.order:
        raise ValidationError(f"{source}: no default and not every element valued")
    vals = [
        assigned.get(x, default.id if default is not None else 0)
        for x in range(group.order)
    ]
    return name, LSubset(group, lattice, vals)


def dump_lsubset(eta, name="lsubset"):
    counts = Counter(eta.vals)
    default = counts.most_common(1)[0][0]
    lat = eta.lattice
    out = [
        f"lsubset {name}",
        f"over group {eta.group.name} lattice {lat.name}",
        f"default {lat.elements[default].name}",
    ]
    for x, v in enumerate(eta.vals):
        if v != default:
            out.append(f"val {eta.group.elements[x]!r} {lat.elements[v].name}")
    return "\n".join(out) + "\n"


def load_lattice(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lattice(fh.read(), source=str(path))


def load_group(path, max_order=None):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group(fh.read(), source=str(path), max_order=max_order)


def load_lsubset(path, group, lattice):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lsubset(fh.read(), group, lattice, source=str(path))
