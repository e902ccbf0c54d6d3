"""Finite permutation groups, subgroup machinery, and classical oracles.

Groups are stored by full element list and composition table; subgroups
are int bitmasks over element ids.  The classical predicates (normalizer,
normal closure, abnormal, contranormal) are independent of the L-valued
layer and serve as its oracles through the crisp correspondence.

Permutations act on the points 1..degree; composition is right-to-left,
(p*q)(i) = p(q(i)), which matches the worked products in the bundled
examples, e.g. (34) = (24)(132)(124).
"""

import re
from array import array

from . import _kernels
from .errors import (
    IncompleteGenerators,
    NotAHomomorphism,
    NotAPermutation,
    NotASubgroup,
    NotNested,
    SizeBudgetExceeded,
)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")

DEFAULT_MAX_ORDER = 10080


def parse_cycles(text, degree):
    """Parse disjoint cycle notation like "(1 2)(3 4)"; "()" is the identity.

    Points are whitespace-separated integers in 1..degree.  Returns the
    0-based image tuple.
    """
    s = text.strip()
    if not s:
        raise NotAPermutation("empty permutation text")
    if _CYCLE_RE.sub("", s).strip():
        raise NotAPermutation(f"malformed cycle notation: {text!r}")
    img = list(range(degree))
    seen = set()
    for body in _CYCLE_RE.findall(s):
        pts = body.split()
        if not pts:
            continue
        try:
            pts = [int(p) for p in pts]
        except ValueError:
            raise NotAPermutation(f"non-integer point in {text!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise NotAPermutation(f"point {p} out of range 1..{degree} in {text!r}")
            if p in seen:
                raise NotAPermutation(f"point {p} repeated in {text!r}")
            seen.add(p)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def format_cycles(perm):
    """Disjoint cycle string of a 0-based image tuple; identity is "()"."""
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        p = perm[start]
        while p != start:
            cyc.append(p)
            seen[p] = True
            p = perm[p]
        out.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) if out else "()"


def compose(p, q):
    """(p*q)(i) = p(q(i)): apply q first."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _check_perm(p, degree):
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise NotAPermutation(f"{p!r} is not a permutation of 0..{degree - 1}")


class GroupElement:
    __slots__ = ("group", "id", "perm")

    def __init__(self, group, eid, perm):
        self.group = group
        self.id = eid
        self.perm = perm

    def __repr__(self):
        return format_cycles(self.perm)


class FiniteGroup:
    """A finite permutation group with full composition and inverse tables."""

    def __init__(self, name, degree, perms, gens=None):
        self.name = name
        self.degree = degree
        self.gens = [tuple(g) for g in gens] if gens is not None else []
        perms = sorted(set(perms))
        for p in perms:
            _check_perm(p, degree)
        self.elements = [GroupElement(self, i, p) for i, p in enumerate(perms)]
        self.index = {p: i for i, p in enumerate(perms)}
        n = len(perms)
        self.order = n

        buf = []
        for p in perms:
            for q in perms:
                r = compose(p, q)
                try:
                    buf.append(self.index[r])
                except KeyError:
                    raise NotASubgroup(f"{name}: element set is not closed under composition") from None
        self.mul_flat = array("i", buf)
        self.inv = array("i", [self.index[invert(p)] for p in perms])
        assert perms[0] == tuple(range(degree)), "identity must sort first"
        self.identity = self.elements[0]

        self._conj_flat = None
        self._closure_cache = {}
        self._subgroups = None
        self._kern = _kernels.get(n)

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order {self.order})"

    def __len__(self):
        return self.order

    # id-level operations
    def mul_ids(self, i, j):
        return self.mul_flat[i * self.order + j]

    def inv_id(self, i):
        return self.inv[i]

    @property
    def conj_flat(self):
        """conj_flat[z*n+x] = z x z^-1, built on first use."""
        if self._conj_flat is None:
            n = self.order
            mf = self.mul_flat
            inv = self.inv
            buf = []
            for z in range(n):
                zi = inv[z]
                for x in range(n):
                    buf.append(mf[mf[z * n + x] * n + zi])
            self._conj_flat = array("i", buf)
        return self._conj_flat

    def conj_ids(self, z, x):
        return self.conj_flat[z * self.order + x]

    # element-level conveniences
    def element(self, text):
        """Element from cycle notation."""
        p = parse_cycles(text, self.degree)
        try:
            return self.elements[self.index[p]]
        except KeyError:
            raise NotAPermutation(f"{text!r} is not an element of {self.name}") from None

    def mul(self, a, b):
        return self.elements[self.mul_ids(a.id, b.id)]

    def inv_of(self, a):
        return self.elements[self.inv[a.id]]

    # subgroup masks
    def mask_of(self, elems):
        mask = 0
        for e in elems:
            if isinstance(e, str):
                e = self.element(e)
            if e.group is not self:
                raise NotAPermutation(f"{e!r} belongs to a different group")
            mask |= 1 << e.id
        return mask

    def elements_of(self, mask):
        return [e for e in self.elements if mask >> e.id & 1]

    def closure_mask(self, seed_mask):
        try:
            return self._closure_cache[seed_mask]
        except KeyError:
            cl = self._kern.closure(self.mul_flat, self.order, seed_mask)
            self._closure_cache[seed_mask] = cl
            return cl

    def full_mask(self):
        return (1 << self.order) - 1


def group_from_generators(degree, gens, name="G", max_order=DEFAULT_MAX_ORDER):
    """Close a generator list (0-based image tuples or cycle strings) under
    composition; fails with SizeBudgetExceeded past max_order elements."""
    parsed = []
    for g in gens:
        if isinstance(g, str):
            g = parse_cycles(g, degree)
        else:
            g = tuple(g)
        _check_perm(g, degree)
        parsed.append(g)
    identity = tuple(range(degree))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in parsed:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    if len(elems) > max_order:
                        raise SizeBudgetExceeded(
                            f"{name}: closure exceeds {max_order} elements"
                        )
                    nxt.append(y)
        frontier = nxt
    return FiniteGroup(name, degree, elems, gens=parsed)


def is_subgroup(G, mask):
    return mask != 0 and mask & 1 and G.closure_mask(mask) == mask


def _require_subgroup(G, mask, label):
    if not is_subgroup(G, mask):
        raise NotASubgroup(f"{label} is not a subgroup of {G.name}")


def _require_nested(G, k_mask, h_mask):
    _require_subgroup(G, k_mask, "K")
    _require_subgroup(G, h_mask, "H")
    if h_mask & ~k_mask:
        raise NotNested("H is not contained in K")


def subgroup_generated(G, seed):
    """Mask of the smallest subgroup containing the seed elements.

    seed may be a mask or an iterable of elements; the empty seed gives {e}.
    """
    mask = seed if isinstance(seed, int) else G.mask_of(seed)
    return G.closure_mask(mask)


def conjugate_subgroup(G, h_mask, g):
    """g H g^-1 for an element g."""
    _require_subgroup(G, h_mask, "H")
    cf = G.conj_flat
    n = G.order
    base = g.id * n
    out = 0
    for x in range(n):
        if h_mask >> x & 1:
            out |= 1 << cf[base + x]
    return out


def classical_normalizer(G, k_mask, h_mask):
    """{k in K : k H k^-1 = H}."""
    _require_nested(G, k_mask, h_mask)
    cf = G.conj_flat
    n = G.order
    out = 0
    for k in range(n):
        if not k_mask >> k & 1:
            continue
        base = k * n
        img = 0
        for x in range(n):
            if h_mask >> x & 1:
                img |= 1 << cf[base + x]
        if img == h_mask:
            out |= 1 << k
    return out


def classical_normal_closure(G, k_mask, h_mask):
    """Smallest normal subgroup of K containing H.

    Alternates collecting K-conjugates with closure until stable.
    """
    _require_nested(G, k_mask, h_mask)
    cf = G.conj_flat
    n = G.order
    cur = G.closure_mask(h_mask)
    while True:
        u = cur
        for k in range(n):
            if not k_mask >> k & 1:
                continue
            base = k * n
            for x in range(n):
                if cur >> x & 1:
                    u |= 1 << cf[base + x]
        nxt = G.closure_mask(u)
        if nxt == cur:
            return cur
        cur = nxt


def classical_is_abnormal(G, k_mask, h_mask):
    """True iff every x in K lies in <H, x H x^-1>."""
    _require_nested(G, k_mask, h_mask)
    cf = G.conj_flat
    n = G.order
    for x in range(n):
        if not k_mask >> x & 1:
            continue
        base = x * n
        conj = 0
        for h in range(n):
            if h_mask >> h & 1:
                conj |= 1 << cf[base + h]
        if not G.closure_mask(h_mask | conj) >> x & 1:
            return False
    return True


def classical_is_contranormal(G, k_mask, h_mask):
    """True iff the normal closure of H in K is all of K."""
    return classical_normal_closure(G, k_mask, h_mask) == k_mask


def all_subgroups(G):
    """Every subgroup of G as a sorted list of masks (by order, then mask)."""
    if G._subgroups is None:
        found = {1}
        frontier = [1]
        while frontier:
            h = frontier.pop()
            for g in range(G.order):
                if h >> g & 1:
                    continue
                h2 = G.closure_mask(h | (1 << g))
                if h2 not in found:
                    found.add(h2)
                    frontier.append(h2)
        G._subgroups = sorted(found, key=lambda mk: (bin(mk).count("1"), mk))
    return list(G._subgroups)


class Homomorphism:
    """A group homomorphism given by its per-element image table."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(mapping)
        n = source.order
        if len(self.mapping) != n:
            raise NotAHomomorphism("image table does not cover the source group")
        if self.mapping[0] != 0:
            raise NotAHomomorphism("identity does not map to identity")
        for x in range(n):
            for y in range(n):
                if self.mapping[source.mul_ids(x, y)] != target.mul_ids(
                    self.mapping[x], self.mapping[y]
                ):
                    raise NotAHomomorphism(
                        f"map({source.elements[x]!r} * {source.elements[y]!r}) "
                        f"differs from the product of the images"
                    )
        self._fibers = None

    def __repr__(self):
        return f"Homomorphism({self.source.name} -> {self.target.name})"

    def apply(self, x):
        return self.target.elements[self.mapping[x.id]]

    @property
    def fibers(self):
        """fibers[t] = list of source ids mapping onto target id t."""
        if self._fibers is None:
            fb = [[] for _ in range(self.target.order)]
            for x, t in enumerate(self.mapping):
                fb[t].append(x)
            self._fibers = fb
        return self._fibers

    @property
    def is_surjective(self):
        return all(self.fibers)


def identity_hom(G):
    return Homomorphism(G, G, range(G.order))


def hom_from_images(G, H, gen_images):
    """Extend generator images multiplicatively to all of G.

    gen_images is a list of (g, h) element pairs.  The listed g must
    generate G; the extension is verified over every product pair.
    """
    gen_ids = []
    img_ids = []
    seed = 0
    for g, h in gen_images:
        if g.group is not G or h.group is not H:
            raise NotAHomomorphism("generator image pair from the wrong groups")
        gen_ids.append(g.id)
        img_ids.append(h.id)
        seed |= 1 << g.id
    if G.closure_mask(seed) != G.full_mask():
        raise IncompleteGenerators("the listed elements do not generate the source group")
    mapping = [None] * G.order
    mapping[0] = 0
    frontier = [0]
    while frontier:
        x = frontier.pop()
        mx = mapping[x]
        for g, hg in zip(gen_ids, img_ids):
            y = G.mul_ids(x, g)
            my = H.mul_ids(mx, hg)
            if mapping[y] is None:
                mapping[y] = my
                frontier.append(y)
            elif mapping[y] != my:
                raise NotAHomomorphism(
                    f"inconsistent images: relations force two values at "
                    f"{G.elements[y]!r}"
                )
    return Homomorphism(G, H, mapping)
