"""L-subsets and L-subgroups: valuations of a finite group in a finite lattice.

An LSubset stores a dense tuple of lattice ids, one per group element.
Instances are immutable and hashable, so enumeration results can be pooled
in sets and used as cache keys.  The subgroup test runs both the axiom
check and the level-subset check and refuses to answer if they disagree.
"""

from .errors import (
    ForeignElement,
    InternalInconsistency,
    MismatchedCarriers,
    NotAnLSubgroup,
    NotASubgroup,
    NotContained,
)
from .group import is_subgroup
from .lattice import is_supstar


def _cache(obj, name):
    cache = getattr(obj, name, None)
    if cache is None:
        cache = {}
        setattr(obj, name, cache)
    return cache


class LSubset:
    """A total valuation of a finite group in a finite lattice."""

    __slots__ = ("group", "lattice", "vals", "_levels", "_image")

    def __init__(self, group, lattice, vals):
        vals = tuple(vals)
        if len(vals) != group.order:
            raise MismatchedCarriers(
                f"valuation has {len(vals)} entries for a group of order {group.order}"
            )
        m = len(lattice.elements)
        for v in vals:
            if not 0 <= v < m:
                raise ForeignElement(f"lattice id {v} out of range for {lattice.name}")
        self.group = group
        self.lattice = lattice
        self.vals = vals
        self._levels = {}
        self._image = None

    @classmethod
    def constant(cls, group, lattice, elem):
        lattice.check_member(elem)
        return cls(group, lattice, [elem.id] * group.order)

    @classmethod
    def from_function(cls, group, lattice, fn):
        """Valuation from a callable GroupElement -> LatticeElement."""
        vals = []
        for x in group.elements:
            v = fn(x)
            lattice.check_member(v)
            vals.append(v.id)
        return cls(group, lattice, vals)

    def __eq__(self, other):
        return (
            isinstance(other, LSubset)
            and self.group is other.group
            and self.lattice is other.lattice
            and self.vals == other.vals
        )

    def __hash__(self):
        return hash((id(self.group), id(self.lattice), self.vals))

    def __repr__(self):
        pairs = ", ".join(
            f"{e!r}:{self.lattice.elements[v].name}" for e, v in zip(self.group.elements, self.vals)
        )
        return f"LSubset({{{pairs}}})"

    def value_of(self, x):
        if x.group is not self.group:
            raise ForeignElement(f"{x!r} is not an element of {self.group.name}")
        return self.lattice.elements[self.vals[x.id]]

    @property
    def tip_id(self):
        lat = self.lattice
        acc = lat.bottom.id
        for v in self.vals:
            acc = lat.join_ids(acc, v)
        return acc

    @property
    def tail_id(self):
        lat = self.lattice
        acc = lat.top.id
        for v in self.vals:
            acc = lat.meet_ids(acc, v)
        return acc

    @property
    def tip(self):
        return self.lattice.elements[self.tip_id]

    @property
    def tail(self):
        return self.lattice.elements[self.tail_id]

    def image_ids(self):
        if self._image is None:
            self._image = frozenset(self.vals)
        return self._image

    def image(self):
        return {self.lattice.elements[v] for v in self.image_ids()}

    def level_mask(self, t_id):
        """Bitmask of {x : value(x) >= t}."""
        try:
            return self._levels[t_id]
        except KeyError:
            up = self.lattice.up_mask(t_id)
            mask = 0
            for x, v in enumerate(self.vals):
                if up >> v & 1:
                    mask |= 1 << x
            self._levels[t_id] = mask
            return mask

    def is_constant(self):
        return len(self.image_ids()) == 1

    def contains(self, other):
        """Pointwise >=."""
        _same_carriers(self, other)
        lat = self.lattice
        return all(lat.le_ids(a, b) for a, b in zip(other.vals, self.vals))


class LPoint:
    """An L-point a_x: the valuation that is a at x and bottom elsewhere."""

    __slots__ = ("a", "x")

    def __init__(self, a, x):
        self.a = a
        self.x = x

    def __repr__(self):
        return f"{self.a.name}_{self.x!r}"

    def in_subset(self, mu):
        """Membership a_x in mu, i.e. a <= mu(x)."""
        mu.lattice.check_member(self.a)
        return mu.lattice.le_ids(self.a.id, mu.vals[self.x.id])


def _same_carriers(*subs):
    g = subs[0].group
    lat = subs[0].lattice
    for s in subs[1:]:
        if s.group is not g or s.lattice is not lat:
            raise MismatchedCarriers("operands live over different carriers")
    return g, lat


def level_set(eta, t):
    """{x : eta(x) >= t} as a bitmask over element ids."""
    eta.lattice.check_member(t)
    return eta.level_mask(t.id)


def union(eta, theta):
    """Pointwise join."""
    _, lat = _same_carriers(eta, theta)
    return LSubset(
        eta.group, lat, [lat.join_ids(a, b) for a, b in zip(eta.vals, theta.vals)]
    )


def intersection(eta, theta):
    """Pointwise meet."""
    _, lat = _same_carriers(eta, theta)
    return LSubset(
        eta.group, lat, [lat.meet_ids(a, b) for a, b in zip(eta.vals, theta.vals)]
    )


def _axiom_check(eta):
    """eta(xy) >= eta(x) ^ eta(y) and eta(x^-1) = eta(x), all pairs."""
    G = eta.group
    lat = eta.lattice
    n = G.order
    vals = eta.vals
    mf = G.mul_flat
    for x in range(n):
        if vals[G.inv[x]] != vals[x]:
            return False
        vx = vals[x]
        base = x * n
        for y in range(n):
            if not lat.le_ids(lat.meet_ids(vx, vals[y]), vals[mf[base + y]]):
                return False
    return True


def _level_subgroup_check(eta):
    """Every non-empty level subset is a subgroup of the group."""
    G = eta.group
    for t in eta.image_ids():
        mask = eta.level_mask(t)
        if mask and not is_subgroup(G, mask):
            return False
    return True


def satisfies_axioms(eta):
    """True iff eta is an L-subgroup of its group.

    Runs the direct axiom check and the level-subset criterion and raises
    InternalInconsistency if they ever disagree.
    """
    direct = _axiom_check(eta)
    levels = _level_subgroup_check(eta)
    if direct != levels:
        raise InternalInconsistency(
            f"axiom check ({direct}) disagrees with level criterion ({levels})"
        )
    return direct


def is_lsubgroup(eta, mu):
    """True iff eta is an L-subgroup of mu: contained pointwise and closed.

    Checked both directly (containment + axioms) and through level subsets
    (every non-empty level of eta is a subgroup of the matching level of
    mu); disagreement raises InternalInconsistency.
    """
    _same_carriers(eta, mu)
    lat = eta.lattice
    contained = all(lat.le_ids(a, b) for a, b in zip(eta.vals, mu.vals))
    direct = contained and _axiom_check(eta)

    by_levels = True
    for t in range(len(lat.elements)):
        em = eta.level_mask(t)
        if not em:
            continue
        if em & ~mu.level_mask(t) or not is_subgroup(eta.group, em):
            by_levels = False
            break
    if direct != by_levels:
        raise InternalInconsistency(
            f"direct L-subgroup check ({direct}) disagrees with level criterion ({by_levels})"
        )
    return direct


def characteristic(G, lattice, h_mask):
    """Top on the subgroup, bottom off it."""
    if not is_subgroup(G, h_mask):
        raise NotASubgroup("characteristic lift needs a subgroup")
    top = lattice.top.id
    bot = lattice.bottom.id
    return LSubset(G, lattice, [top if h_mask >> x & 1 else bot for x in range(G.order)])


def trivial_lsubgroup(eta):
    """Tip at the identity, tail elsewhere."""
    if not satisfies_axioms(eta):
        raise NotAnLSubgroup("trivial L-subgroup is defined for L-subgroups only")
    tip = eta.tip_id
    tail = eta.tail_id
    vals = [tail] * eta.group.order
    vals[0] = tip
    return LSubset(eta.group, eta.lattice, vals)


def set_product(mu, eta):
    """(mu o eta)(x) = sup over factorizations x = y z of mu(y) ^ eta(z)."""
    G, lat = _same_carriers(mu, eta)
    kern = G._kern
    m = len(lat.elements)
    vals = kern.set_product_values(
        G.order, m, mu.vals, eta.vals, G.mul_flat, G.inv,
        lat.meet_flat, lat.join_flat, lat.bottom.id,
    )
    return LSubset(G, lat, vals)


def generated_vals(G, lat, vals):
    """Cached generated-L-subgroup valuation for raw value tuples."""
    cache = _cache(G, "_gen_cache")
    key = (id(lat), vals)
    try:
        return cache[key]
    except KeyError:
        tip = lat.bottom.id
        for v in vals:
            tip = lat.join_ids(tip, v)
        m = len(lat.elements)
        out = tuple(
            G._kern.generated_values(
                G.order, m, vals, tip, lat.bottom.id,
                G.mul_flat, lat.leq_flat, lat.join_flat,
            )
        )
        cache[key] = out
        return out


def generated(eta, mu):
    """Smallest L-subgroup of mu containing eta.

    Computed as x -> sup{a <= tip(eta) : x in <level a of eta>}, folding
    over every lattice element below the tip.
    """
    _same_carriers(eta, mu)
    if not satisfies_axioms(mu):
        raise NotAnLSubgroup("the parent of generated() must be an L-subgroup")
    if not mu.contains(eta):
        raise NotContained("generated() needs eta contained in mu")
    out = LSubset(eta.group, eta.lattice, generated_vals(eta.group, eta.lattice, eta.vals))
    assert mu.contains(out), "generated result escaped its parent"
    return out


def _sup_property_direct(eta):
    """Quantify over all subsets of the group: sup of values is attained."""
    G = eta.group
    lat = eta.lattice
    n = G.order
    vals = eta.vals
    for mask in range(1, 1 << n):
        acc = lat.bottom.id
        w = mask
        x = 0
        attained = False
        while w:
            if w & 1:
                acc = lat.join_ids(acc, vals[x])
            w >>= 1
            x += 1
        w = mask
        x = 0
        while w:
            if w & 1 and vals[x] == acc:
                attained = True
                break
            w >>= 1
            x += 1
        if not attained:
            return False
    return True


def has_sup_property(eta):
    """True iff every subset of the group attains the supremum of its values.

    Equivalent to the image being a supstar subset of the lattice; for
    groups of order at most 12 the direct quantification over all subsets
    is run as well and must agree.
    """
    cache = _cache(eta.group, "_sup_cache")
    key = (id(eta.lattice), eta.vals)
    try:
        return cache[key]
    except KeyError:
        pass
    lat = eta.lattice
    result = is_supstar(lat, [lat.elements[v] for v in eta.image_ids()])
    if eta.group.order <= 12:
        direct = _sup_property_direct(eta)
        if direct != result:
            raise InternalInconsistency(
                f"sup-property via image supstar ({result}) disagrees with "
                f"direct subset quantification ({direct})"
            )
    cache[key] = result
    return result


def jointly_supstar(eta, theta):
    """True iff Im(eta) united with Im(theta) is a supstar subset."""
    _same_carriers(eta, theta)
    lat = eta.lattice
    ids = eta.image_ids() | theta.image_ids()
    return is_supstar(lat, [lat.elements[v] for v in ids])


def image(f, eta):
    """f(eta)(y) = sup of eta over the fiber of y; empty fiber gives bottom."""
    if eta.group is not f.source:
        raise MismatchedCarriers("image() needs a valuation over the source group")
    lat = eta.lattice
    out = []
    for ys in f.fibers:
        acc = lat.bottom.id
        for x in ys:
            acc = lat.join_ids(acc, eta.vals[x])
        out.append(acc)
    return LSubset(f.target, lat, out)


def preimage(f, nu):
    """f^-1(nu)(x) = nu(f(x))."""
    if nu.group is not f.target:
        raise MismatchedCarriers("preimage() needs a valuation over the target group")
    return LSubset(f.source, nu.lattice, [nu.vals[t] for t in f.mapping])
