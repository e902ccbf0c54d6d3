# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled kernels: exact mirror of the pure module.

Same inputs, same outputs, same solution order and node accounting as
pure.py; group subsets are packed into 64-bit words, so these kernels
serve groups of at most 64 elements (the dispatcher enforces that).
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND = "compiled"


cdef unsigned long long _closure_c(const int* mul, int n, unsigned long long seed) noexcept nogil:
    cdef unsigned long long mask = seed | 1ULL
    cdef int gens[64]
    cdef int stack[64]
    cdef int ng = 0, sp = 0, i, x, y
    for i in range(n):
        if seed >> i & 1ULL:
            gens[ng] = i
            ng += 1
    if ng == 0:
        return 1ULL
    for i in range(n):
        if mask >> i & 1ULL:
            stack[sp] = i
            sp += 1
    while sp > 0:
        sp -= 1
        x = stack[sp]
        for i in range(ng):
            y = mul[x * n + gens[i]]
            if not (mask >> y & 1ULL):
                mask |= 1ULL << y
                stack[sp] = y
                sp += 1
    return mask


def closure(mul_flat, n, seed_mask):
    """Bitmask of the subgroup generated by the elements set in seed_mask."""
    cdef const int[:] mul = mul_flat
    return _closure_c(&mul[0], n, <unsigned long long> seed_mask)


def generated_values(n, m, vals, tip, bottom, mul_flat, leq_flat, join_flat):
    """Valuation of the generated L-subgroup: x -> sup{c <= tip : x in <level c>}."""
    cdef const int[:] mul = mul_flat
    cdef const signed char[:] leq = leq_flat
    cdef const int[:] join = join_flat
    cdef int N = n, M = m, TIP = tip, c, x
    cdef int vbuf[64]
    cdef int out[64]
    cdef unsigned long long lm, cl
    for x in range(N):
        vbuf[x] = vals[x]
        out[x] = bottom
    for c in range(M):
        if not leq[c * M + TIP]:
            continue
        lm = 0
        for x in range(N):
            if leq[c * M + vbuf[x]]:
                lm |= 1ULL << x
        cl = _closure_c(&mul[0], N, lm)
        for x in range(N):
            if cl >> x & 1ULL:
                out[x] = join[out[x] * M + c]
    return [out[x] for x in range(N)]


def generated_value_at(n, m, vals, tip, bottom, mul_flat, leq_flat, join_flat, target):
    """Single entry of generated_values, with early exit once the tip is reached."""
    cdef const int[:] mul = mul_flat
    cdef const signed char[:] leq = leq_flat
    cdef const int[:] join = join_flat
    cdef int N = n, M = m, TIP = tip, TGT = target, c, x
    cdef int acc = bottom
    cdef int vbuf[64]
    cdef unsigned long long lm
    for x in range(N):
        vbuf[x] = vals[x]
    for c in range(M):
        if not leq[c * M + TIP]:
            continue
        lm = 0
        for x in range(N):
            if leq[c * M + vbuf[x]]:
                lm |= 1ULL << x
        if _closure_c(&mul[0], N, lm) >> TGT & 1ULL:
            acc = join[acc * M + c]
            if acc == TIP:
                break
    return acc


def wu_normal(n, m, eta, mu, conj_flat, leq_flat, meet_flat):
    """eta(y x y^-1) >= eta(x) ^ mu(y) for all pairs; conj_flat[y*n+x] = yxy^-1."""
    cdef const int[:] conj = conj_flat
    cdef const signed char[:] leq = leq_flat
    cdef const int[:] meet = meet_flat
    cdef int N = n, M = m, x, y, my, need
    cdef int ebuf[64]
    cdef int mbuf[64]
    for x in range(N):
        ebuf[x] = eta[x]
        mbuf[x] = mu[x]
    for y in range(N):
        my = mbuf[y]
        for x in range(N):
            need = meet[ebuf[x] * M + my]
            if not leq[need * M + ebuf[conj[y * N + x]]]:
                return False
    return True


def conjugate_values(n, m, eta, a, z, conj_flat, meet_flat):
    """Conjugate by the point a_z: x -> a ^ eta(z x z^-1)."""
    cdef const int[:] conj = conj_flat
    cdef const int[:] meet = meet_flat
    cdef int N = n, M = m, A = a, x
    cdef int base = z * n
    cdef int ebuf[64]
    for x in range(N):
        ebuf[x] = eta[x]
    return [meet[A * M + ebuf[conj[base + x]]] for x in range(N)]


def conjugate_closure_values(n, m, eta, mu, conj_flat, inv, meet_flat, join_flat, bottom):
    """x -> sup over z of eta(z^-1 x z) ^ mu(z)."""
    cdef const int[:] conj = conj_flat
    cdef const int[:] invv = inv
    cdef const int[:] meet = meet_flat
    cdef const int[:] join = join_flat
    cdef int N = n, M = m, x, z, mz, base, t
    cdef int ebuf[64]
    cdef int mbuf[64]
    cdef int out[64]
    for x in range(N):
        ebuf[x] = eta[x]
        mbuf[x] = mu[x]
        out[x] = bottom
    for z in range(N):
        mz = mbuf[z]
        base = invv[z] * N
        for x in range(N):
            t = meet[ebuf[conj[base + x]] * M + mz]
            out[x] = join[out[x] * M + t]
    return [out[x] for x in range(N)]


def set_product_values(n, m, mu, eta, mul_flat, inv, meet_flat, join_flat, bottom):
    """x -> sup over factorizations x = y z of mu(y) ^ eta(z)."""
    cdef const int[:] mul = mul_flat
    cdef const int[:] invv = inv
    cdef const int[:] meet = meet_flat
    cdef const int[:] join = join_flat
    cdef int N = n, M = m, x, y, my, base, t
    cdef int ebuf[64]
    cdef int mbuf[64]
    cdef int out[64]
    for x in range(N):
        ebuf[x] = eta[x]
        mbuf[x] = mu[x]
        out[x] = bottom
    for y in range(N):
        my = mbuf[y]
        base = invv[y] * N
        for x in range(N):
            t = meet[my * M + ebuf[mul[base + x]]]
            out[x] = join[out[x] * M + t]
    return [out[x] for x in range(N)]


cdef struct EnumCtx:
    const int* mul
    const int* inv
    const signed char* leq
    const int* join
    const int* meet
    int n
    int m
    int* dirty


cdef bint _propagate(EnumCtx* ctx, int* lb, int* ub, int* seed, int nseed) noexcept nogil:
    # Worklist fixpoint of lb[xy] >= lb[x] ^ lb[y] and lb[x^-1] >= lb[x];
    # fails when some lb escapes its cap.  LIFO order, matching pure.py.
    cdef int n = ctx.n, m = ctx.m
    cdef int sp = 0, i, x, y, z, vx, ix, t, nv
    for i in range(nseed):
        ctx.dirty[sp] = seed[i]
        sp += 1
    while sp > 0:
        sp -= 1
        x = ctx.dirty[sp]
        vx = lb[x]
        ix = ctx.inv[x]
        if not ctx.leq[vx * m + lb[ix]]:
            nv = ctx.join[lb[ix] * m + vx]
            if not ctx.leq[nv * m + ub[ix]]:
                return 0
            lb[ix] = nv
            ctx.dirty[sp] = ix
            sp += 1
        for y in range(n):
            t = ctx.meet[vx * m + lb[y]]
            z = ctx.mul[x * n + y]
            if not ctx.leq[t * m + lb[z]]:
                nv = ctx.join[lb[z] * m + t]
                if not ctx.leq[nv * m + ub[z]]:
                    return 0
                lb[z] = nv
                ctx.dirty[sp] = z
                sp += 1
            z = ctx.mul[y * n + x]
            if not ctx.leq[t * m + lb[z]]:
                nv = ctx.join[lb[z] * m + t]
                if not ctx.leq[nv * m + ub[z]]:
                    return 0
                lb[z] = nv
                ctx.dirty[sp] = z
                sp += 1
    return 1


def enum_interval(n, m, mul_flat, inv, lo, hi, leq_flat, join_flat, meet_flat,
                  budget, max_solutions):
    """Depth-first enumeration of the L-subgroup interval; see pure.enum_interval.

    Identical semantics: element order, candidate order, node accounting,
    and status strings match the pure implementation exactly.
    """
    cdef const int[:] mul = mul_flat
    cdef const int[:] invv = inv
    cdef const signed char[:] leq = leq_flat
    cdef const int[:] join = join_flat
    cdef const int[:] meet = meet_flat
    cdef int N = n, M = m
    cdef long long nodes = 0
    cdef long long BUDGET = budget
    cdef long long MAXSOL = max_solutions
    cdef int x, k, v
    cdef list sols = []
    cdef str status = "done"

    for x in range(N):
        if not leq[lo[x] * M + hi[x]]:
            return [], 0, "done"

    cdef EnumCtx ctx
    ctx.mul = &mul[0]
    ctx.inv = &invv[0]
    ctx.leq = &leq[0]
    ctx.join = &join[0]
    ctx.meet = &meet[0]
    ctx.n = N
    ctx.m = M

    # Workspace: per-depth lb/ub snapshots, candidate cursors, dirty queue.
    cdef int* lbs = <int*> malloc((N + 1) * N * sizeof(int))
    cdef int* ubs = <int*> malloc((N + 1) * N * sizeof(int))
    cdef int* vcur = <int*> malloc((N + 1) * sizeof(int))
    cdef int* seed = <int*> malloc(N * sizeof(int))
    ctx.dirty = <int*> malloc((N * M + N + 8) * sizeof(int))
    if lbs == NULL or ubs == NULL or vcur == NULL or seed == NULL or ctx.dirty == NULL:
        free(<void*> lbs)
        free(<void*> ubs)
        free(<void*> vcur)
        free(<void*> seed)
        free(<void*> ctx.dirty)
        raise MemoryError()

    try:
        for x in range(N):
            lbs[x] = lo[x]
            ubs[x] = hi[x]
            seed[x] = x
        nodes += 1
        if not _propagate(&ctx, lbs, ubs, seed, N):
            return [], nodes, status

        k = 0
        vcur[0] = 0
        while k >= 0:
            if k == N:
                sols.append(tuple([lbs[N * N + x] for x in range(N)]))
                if <long long> len(sols) >= MAXSOL:
                    status = "maxsol"
                    break
                k -= 1
                continue
            # resume candidate scan for element k from vcur[k]
            v = vcur[k]
            while v < M:
                if leq[lbs[k * N + k] * M + v] and leq[v * M + ubs[k * N + k]]:
                    break
                v += 1
            if v >= M:
                k -= 1
                continue
            vcur[k] = v + 1
            nodes += 1
            if nodes > BUDGET:
                status = "budget"
                break
            memcpy(lbs + (k + 1) * N, lbs + k * N, N * sizeof(int))
            memcpy(ubs + (k + 1) * N, ubs + k * N, N * sizeof(int))
            lbs[(k + 1) * N + k] = v
            ubs[(k + 1) * N + k] = v
            seed[0] = k
            if _propagate(&ctx, lbs + (k + 1) * N, ubs + (k + 1) * N, seed, 1):
                k += 1
                if k < N:
                    vcur[k] = 0
        return sols, nodes, status
    finally:
        free(<void*> lbs)
        free(<void*> ubs)
        free(<void*> vcur)
        free(<void*> seed)
        free(<void*> ctx.dirty)
