"""Pure-Python kernels.

These are the reference implementations of the hot inner loops; the
compiled core in _core.pyx mirrors them exactly (same results, same
solution order, same node accounting).  Group subsets are int bitmasks
over element ids; the identity element always has id 0.  Lattice tables
arrive flattened: mul_flat[x*n+y], leq_flat[s*m+t] (1 iff s <= t),
join_flat/meet_flat likewise.
"""

BACKEND = "pure"


def closure(mul_flat, n, seed_mask):
    """Bitmask of the subgroup generated by the elements set in seed_mask."""
    mask = seed_mask | 1
    gens = [i for i in range(n) if seed_mask >> i & 1]
    if not gens:
        return 1
    stack = [i for i in range(n) if mask >> i & 1]
    while stack:
        x = stack.pop()
        base = x * n
        for g in gens:
            y = mul_flat[base + g]
            if not mask >> y & 1:
                mask |= 1 << y
                stack.append(y)
    return mask


def generated_values(n, m, vals, tip, bottom, mul_flat, leq_flat, join_flat):
    """Valuation of the generated L-subgroup: x -> sup{c <= tip : x in <level c>}."""
    out = [bottom] * n
    for c in range(m):
        if not leq_flat[c * m + tip]:
            continue
        lm = 0
        for x in range(n):
            if leq_flat[c * m + vals[x]]:
                lm |= 1 << x
        cl = closure(mul_flat, n, lm)
        x = 0
        while cl:
            if cl & 1:
                out[x] = join_flat[out[x] * m + c]
            cl >>= 1
            x += 1
    return out


def generated_value_at(n, m, vals, tip, bottom, mul_flat, leq_flat, join_flat, target):
    """Single entry of generated_values, with early exit once the tip is reached."""
    acc = bottom
    for c in range(m):
        if not leq_flat[c * m + tip]:
            continue
        lm = 0
        for x in range(n):
            if leq_flat[c * m + vals[x]]:
                lm |= 1 << x
        if closure(mul_flat, n, lm) >> target & 1:
            acc = join_flat[acc * m + c]
            if acc == tip:
                break
    return acc


def wu_normal(n, m, eta, mu, conj_flat, leq_flat, meet_flat):
    """eta(y x y^-1) >= eta(x) ^ mu(y) for all pairs; conj_flat[y*n+x] = yxy^-1."""
    for y in range(n):
        my = mu[y]
        base = y * n
        for x in range(n):
            need = meet_flat[eta[x] * m + my]
            if not leq_flat[need * m + eta[conj_flat[base + x]]]:
                return False
    return True


def conjugate_values(n, m, eta, a, z, conj_flat, meet_flat):
    """Conjugate by the point a_z: x -> a ^ eta(z x z^-1)."""
    base = z * n
    return [meet_flat[a * m + eta[conj_flat[base + x]]] for x in range(n)]


def conjugate_closure_values(n, m, eta, mu, conj_flat, inv, meet_flat, join_flat, bottom):
    """x -> sup over z of eta(z^-1 x z) ^ mu(z)."""
    out = [bottom] * n
    for z in range(n):
        mz = mu[z]
        base = inv[z] * n
        for x in range(n):
            t = meet_flat[eta[conj_flat[base + x]] * m + mz]
            out[x] = join_flat[out[x] * m + t]
    return out


def set_product_values(n, m, mu, eta, mul_flat, inv, meet_flat, join_flat, bottom):
    """x -> sup over factorizations x = y z of mu(y) ^ eta(z)."""
    out = [bottom] * n
    for y in range(n):
        my = mu[y]
        base = inv[y] * n
        for x in range(n):
            t = meet_flat[my * m + eta[mul_flat[base + x]]]
            out[x] = join_flat[out[x] * m + t]
    return out


def enum_interval(n, m, mul_flat, inv, lo, hi, leq_flat, join_flat, meet_flat,
                  budget, max_solutions):
    """Depth-first enumeration of all valuations t with lo <= t <= hi pointwise
    that satisfy both L-subgroup axioms.

    Elements are assigned in id order; candidate values in lattice id order.
    After each assignment, lower bounds are propagated to a fixpoint with the
    closure rule lb[xy] >= lb[x] ^ lb[y] and the inverse rule lb[x^-1] >= lb[x];
    a branch dies when some lb escapes its upper cap.  Each assignment attempt
    costs one budget node.

    Returns (solutions, nodes_used, status); status is "done" when the space
    was fully explored, "budget" when the node budget ran out, "maxsol" when
    max_solutions were collected first.
    """
    for x in range(n):
        if not leq_flat[lo[x] * m + hi[x]]:
            return [], 0, "done"

    sols = []
    state = {"nodes": 0, "status": "done"}

    def propagate(lb, ub, dirty):
        while dirty:
            x = dirty.pop()
            vx = lb[x]
            ix = inv[x]
            if not leq_flat[vx * m + lb[ix]]:
                nv = join_flat[lb[ix] * m + vx]
                if not leq_flat[nv * m + ub[ix]]:
                    return False
                lb[ix] = nv
                dirty.append(ix)
            for y in range(n):
                t = meet_flat[vx * m + lb[y]]
                z = mul_flat[x * n + y]
                if not leq_flat[t * m + lb[z]]:
                    nv = join_flat[lb[z] * m + t]
                    if not leq_flat[nv * m + ub[z]]:
                        return False
                    lb[z] = nv
                    dirty.append(z)
                z = mul_flat[y * n + x]
                if not leq_flat[t * m + lb[z]]:
                    nv = join_flat[lb[z] * m + t]
                    if not leq_flat[nv * m + ub[z]]:
                        return False
                    lb[z] = nv
                    dirty.append(z)
        return True

    def dfs(k, lb, ub):
        if state["status"] != "done":
            return
        if k == n:
            sols.append(tuple(lb))
            if len(sols) >= max_solutions:
                state["status"] = "maxsol"
            return
        lbk = lb[k]
        ubk = ub[k]
        for v in range(m):
            if state["status"] != "done":
                return
            if not (leq_flat[lbk * m + v] and leq_flat[v * m + ubk]):
                continue
            state["nodes"] += 1
            if state["nodes"] > budget:
                state["status"] = "budget"
                return
            lb2 = lb.copy()
            ub2 = ub.copy()
            lb2[k] = v
            ub2[k] = v
            if propagate(lb2, ub2, [k]):
                dfs(k + 1, lb2, ub2)

    state["nodes"] += 1
    lb0 = list(lo)
    ub0 = list(hi)
    if propagate(lb0, ub0, list(range(n))):
        dfs(0, lb0, ub0)
    return sols, state["nodes"], state["status"]
