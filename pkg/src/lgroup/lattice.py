"""Finite bounded lattices with exact order, join and meet tables.

A lattice is built from its Hasse diagram (cover pairs).  The order is the
reflexive-transitive closure of the covers; join and meet tables are
precomputed for every pair at construction time, so all downstream
operations are table lookups.  Instances are immutable after construction.
"""

from array import array

from .errors import (
    DanglingCover,
    DuplicateName,
    EmptySubset,
    ForeignElement,
    NoBounds,
    NotALattice,
)


class LatticeElement:
    """An element of a FiniteLattice; identity-compared, interned per lattice."""

    __slots__ = ("lattice", "id", "name")

    def __init__(self, lattice, eid, name):
        self.lattice = lattice
        self.id = eid
        self.name = name

    def __repr__(self):
        return f"<{self.name}>"


class FiniteLattice:
    """A finite bounded lattice: elements, order relation, join/meet tables."""

    def __init__(self, name, element_names, covers_by_id):
        # Internal constructor; use build_lattice() to get validation.
        self.name = name
        self.elements = [LatticeElement(self, i, n) for i, n in enumerate(element_names)]
        self._by_name = {e.name: e for e in self.elements}
        self.covers = sorted(covers_by_id)
        m = len(self.elements)

        # up[i] has bit j set iff i <= j (reflexive-transitive cover closure)
        up = [1 << i for i in range(m)]
        succ = [[] for _ in range(m)]
        for lo, hi in covers_by_id:
            succ[lo].append(hi)
        changed = True
        while changed:
            changed = False
            for i in range(m):
                acc = up[i]
                for j in succ[i]:
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        self._up = up

        for i in range(m):
            for j in range(m):
                if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                    raise NotALattice(
                        f"{name}: covers create a cycle through "
                        f"{element_names[i]} and {element_names[j]}"
                    )

        full = (1 << m) - 1
        bottoms = [i for i in range(m) if up[i] == full]
        tops = [i for i in range(m) if all(up[j] >> i & 1 for j in range(m))]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NoBounds(f"{name}: no unique global bottom/top element")
        self.bottom = self.elements[bottoms[0]]
        self.top = self.elements[tops[0]]

        down = [0] * m
        for i in range(m):
            for j in range(m):
                if up[j] >> i & 1:
                    down[i] |= 1 << j
        self._down = down

        join = [[0] * m for _ in range(m)]
        meet = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                ub = up[i] & up[j]
                least = [k for k in range(m) if ub >> k & 1 and up[k] & ub == ub]
                lb = down[i] & down[j]
                greatest = [k for k in range(m) if lb >> k & 1 and down[k] & lb == lb]
                if len(least) != 1:
                    raise NotALattice(
                        f"{name}: {element_names[i]} and {element_names[j]} "
                        f"have no unique least upper bound"
                    )
                if len(greatest) != 1:
                    raise NotALattice(
                        f"{name}: {element_names[i]} and {element_names[j]} "
                        f"have no unique greatest lower bound"
                    )
                join[i][j] = least[0]
                meet[i][j] = greatest[0]
        self._join = join
        self._meet = meet

        # flat copies for the compiled kernels
        self.join_flat = array("i", [join[i][j] for i in range(m) for j in range(m)])
        self.meet_flat = array("i", [meet[i][j] for i in range(m) for j in range(m)])
        self.leq_flat = array("b", [1 if up[i] >> j & 1 else 0 for i in range(m) for j in range(m)])

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, {len(self.elements)} elements)"

    def element(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise ForeignElement(f"lattice {self.name} has no element {name!r}") from None

    def check_member(self, x):
        if not isinstance(x, LatticeElement) or x.lattice is not self:
            raise ForeignElement(f"{x!r} is not an element of lattice {self.name}")

    # id-level operations (hot paths)
    def le_ids(self, i, j):
        return bool(self._up[i] >> j & 1)

    def join_ids(self, i, j):
        return self._join[i][j]

    def meet_ids(self, i, j):
        return self._meet[i][j]

    def up_mask(self, i):
        """Bitmask of {j : i <= j}."""
        return self._up[i]

    def down_ids(self, i):
        """Ids of {j : j <= i} in increasing order."""
        d = self._down[i]
        return [j for j in range(len(self.elements)) if d >> j & 1]

    # element-level operations
    def le(self, a, b):
        self.check_member(a)
        self.check_member(b)
        return self.le_ids(a.id, b.id)

    def join(self, a, b):
        self.check_member(a)
        self.check_member(b)
        return self.elements[self._join[a.id][b.id]]

    def meet(self, a, b):
        self.check_member(a)
        self.check_member(b)
        return self.elements[self._meet[a.id][b.id]]


def build_lattice(element_names, covers, name="L"):
    """Build a bounded lattice from element names and Hasse cover pairs.

    covers is an iterable of (lower, upper) name pairs.  Fails with
    NotALattice / NoBounds when the resulting poset is not a bounded
    lattice, DuplicateName / DanglingCover on malformed input.
    """
    names = list(element_names)
    seen = set()
    for n in names:
        if n in seen:
            raise DuplicateName(f"element name {n!r} declared twice")
        seen.add(n)
    index = {n: i for i, n in enumerate(names)}
    covers_by_id = []
    for lo, hi in covers:
        if lo not in index or hi not in index:
            missing = lo if lo not in index else hi
            raise DanglingCover(f"cover ({lo}, {hi}) references undeclared element {missing!r}")
        covers_by_id.append((index[lo], index[hi]))
    return FiniteLattice(name, names, covers_by_id)


def sup_of(lattice, subset):
    """Supremum of a set of elements; the empty set yields the bottom."""
    acc = lattice.bottom
    for x in subset:
        lattice.check_member(x)
        acc = lattice.elements[lattice.join_ids(acc.id, x.id)]
    return acc


def inf_of(lattice, subset):
    """Infimum of a set of elements; the empty set yields the top."""
    acc = lattice.top
    for x in subset:
        lattice.check_member(x)
        acc = lattice.elements[lattice.meet_ids(acc.id, x.id)]
    return acc


def product(l1, l2, name=None):
    """Componentwise-ordered product lattice.

    Element names are "(a,b)" built from the factor names; covers change
    exactly one coordinate by a factor cover.
    """
    if name is None:
        name = f"{l1.name}x{l2.name}"
    names = []
    for a in l1.elements:
        for b in l2.elements:
            names.append(f"({a.name},{b.name})")
    covers = []
    for a in l1.elements:
        for b in l2.elements:
            for lo, hi in l1.covers:
                if lo == a.id:
                    covers.append((f"({a.name},{b.name})", f"({l1.elements[hi].name},{b.name})"))
            for lo, hi in l2.covers:
                if lo == b.id:
                    covers.append((f"({a.name},{b.name})", f"({a.name},{l2.elements[hi].name})"))
    return build_lattice(names, covers, name=name)


def is_chain(lattice):
    """True iff every pair of elements is comparable."""
    m = len(lattice.elements)
    for i in range(m):
        for j in range(i + 1, m):
            if not lattice.le_ids(i, j) and not lattice.le_ids(j, i):
                return False
    return True


def is_upper_well_ordered(lattice):
    """True iff every non-empty subset contains its supremum.

    For a finite lattice this is equivalent to being a chain: any
    incomparable pair {a, b} is a witness subset, since its supremum
    a v b lies outside the pair.  Implemented as the pairwise scan.
    """
    return is_chain(lattice)


def is_supstar(lattice, subset):
    """True iff every non-empty subset A of the given set contains sup(A).

    Equivalent, for finite lattices, to the set being a chain; the chain
    test is used and cross-checked against brute-force subset enumeration
    when the set is small.
    """
    xs = list(subset)
    if not xs:
        raise EmptySubset("supstar is defined for non-empty subsets only")
    for x in xs:
        lattice.check_member(x)
    chainwise = True
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if not lattice.le_ids(xs[i].id, xs[j].id) and not lattice.le_ids(xs[j].id, xs[i].id):
                chainwise = False
                break
        if not chainwise:
            break
    if len(xs) <= 12:
        brute = _supstar_bruteforce(lattice, xs)
        if brute != chainwise:
            from .errors import InternalInconsistency

            raise InternalInconsistency(
                f"supstar chain test ({chainwise}) disagrees with subset "
                f"enumeration ({brute}) on {[x.name for x in xs]}"
            )
    return chainwise


def _supstar_bruteforce(lattice, xs):
    """Check every non-empty subset directly for containing its supremum."""
    n = len(xs)
    for mask in range(1, 1 << n):
        chosen = [xs[i] for i in range(n) if mask >> i & 1]
        s = sup_of(lattice, chosen)
        if all(s is not x for x in chosen):
            return False
    return True


def is_distributive(lattice):
    """True iff a ^ (b v c) == (a ^ b) v (a ^ c) for every triple."""
    return distributivity_witness(lattice) is None


def distributivity_witness(lattice):
    """First triple (a, b, c) violating distributivity, or None."""
    m = len(lattice.elements)
    jn, mt = lattice._join, lattice._meet
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if mt[i][jn[j][k]] != jn[mt[i][j]][mt[i][k]]:
                    e = lattice.elements
                    return (e[i], e[j], e[k])
    return None
