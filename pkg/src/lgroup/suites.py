"""Verification suites: worked examples, theorem properties, crisp bridge.

The theorems suite enumerates every L-subgroup of the constant-top parent
on each configured (group, lattice) instance and checks the classification
theorems over all nested pairs.  Per-subject quantities that do not depend
on the parent (conjugate containments, generated hulls of unions, level
identities) are computed once per subject and reused across pairs, which
is what keeps the full pair scan affordable.

Homomorphism cases run against the identity map on every instance and
against the degree-3 quotient of S4 (kernel the Klein four-group) on the
crisp S4 instance.  The generated-hull/level and generated-hull/hom cases
additionally cover non-subgroup subjects: unions of enumerated subjects
and conjugate closures, which is where those theorems have content.
"""

import os
import time
from concurrent import futures
from dataclasses import dataclass, field

from . import instances as inst
from .errors import BudgetExceeded, LGroupError
from .group import (
    all_subgroups,
    classical_is_abnormal,
    classical_is_contranormal,
    hom_from_images,
    identity_hom,
)
from .lattice import is_chain
from .lsub import LSubset, characteristic, generated_vals, image, is_lsubgroup, preimage, satisfies_axioms
from . import theory as theory_mod
from .theory import (
    DEFAULT_BUDGET,
    _conj_vals,
    enumerate_lsubgroups,
    is_abnormal,
    is_contranormal,
    lpoints,
)

SUITES = ("paper-examples", "theorems", "crisp-bridge")

THEOREMS = (
    "lsubgroup-2way",
    "normal-3way",
    "abn-nor",
    "norm-abn",
    "abn-contra",
    "con-sub",
    "max-dichotomy",
    "lvl-conj",
    "conj-inv",
    "cc-union",
    "levsub1",
    "lev-contra",
    "conj-sup",
    "nc-sup",
    "gen-sup",
    "gen-hom",
    "hom-conj",
    "hom-lev",
    "hom-abn",
)

THEOREM_INSTANCES = (
    ("S3x2", "s3", "chain2"),
    ("S3x3", "s3", "chain3"),
    ("S3xM", "s3", "lattice_m"),
    ("D4x2", "d4", "chain2"),
    ("D4x3", "d4", "chain3"),
    ("D4xM", "d4", "lattice_m"),
    ("Z6x2", "z6", "chain2"),
    ("Z6x3", "z6", "chain3"),
    ("Z6xM", "z6", "lattice_m"),
    ("A4x2", "a4", "chain2"),
    ("S4x2", "s4", "chain2"),
)

CRISP_GROUPS = (("S3", "s3"), ("D4", "d4"), ("A4", "a4"), ("S4", "s4"))


@dataclass
class CaseResult:
    case_id: str
    status: str  # "pass" | "fail" | "skip"
    expected: str = ""
    actual: str = ""


@dataclass
class SuiteResult:
    suite: str
    cases_run: int
    cases_passed: int
    cases_skipped: int
    failures: list
    wall_ms: float
    cases: list = field(default_factory=list)


def _popcount(x):
    return bin(x).count("1")


class _TheoremChecker:
    """One theorem-suite instance: enumerate, precompute, scan all pairs."""

    def __init__(self, key, G, lat, subs):
        self.key = key
        self.G = G
        self.lat = lat
        self.subs = subs
        self.checked = {t: 0 for t in THEOREMS}
        self.viol = {t: [] for t in THEOREMS}

        n = G.order
        m = len(lat.elements)
        self.n, self.m = n, m
        self.bot = lat.bottom.id
        self.top = lat.top.id
        self.chain = is_chain(lat)
        self.vals = [s.vals for s in subs]
        self.tips = [s.tip_id for s in subs]
        self.images = [s.image_ids() for s in subs]
        self.lvl = [[s.level_mask(t) for t in range(m)] for s in subs]
        self._normality = {}
        self._cls_abn = {}
        self._cls_con = {}
        self._supstar = {}
        self._gen_sup = {}

    def note(self, thm, ok, desc):
        self.checked[thm] += 1
        if not ok and len(self.viol[thm]) < 3:
            self.viol[thm].append(desc() if callable(desc) else desc)

    # cached helpers -----------------------------------------------------
    def _is_normal_subgroup(self, big, small):
        key = (big, small)
        try:
            return self._normality[key]
        except KeyError:
            cf = self.G.conj_flat
            n = self.n
            ok = True
            for y in range(n):
                if not big >> y & 1:
                    continue
                base = y * n
                img = 0
                for x in range(n):
                    if small >> x & 1:
                        img |= 1 << cf[base + x]
                if img != small:
                    ok = False
                    break
            self._normality[key] = ok
            return ok

    def _classical_abn(self, kmask, hmask):
        key = (kmask, hmask)
        try:
            return self._cls_abn[key]
        except KeyError:
            ok = classical_is_abnormal(self.G, kmask, hmask)
            self._cls_abn[key] = ok
            return ok

    def _classical_con(self, kmask, hmask):
        key = (kmask, hmask)
        try:
            return self._cls_con[key]
        except KeyError:
            ok = classical_is_contranormal(self.G, kmask, hmask)
            self._cls_con[key] = ok
            return ok

    def _supstar_ids(self, ids):
        key = frozenset(ids)
        try:
            return self._supstar[key]
        except KeyError:
            lat = self.lat
            ok = True
            lst = sorted(key)
            for i in range(len(lst)):
                for j in range(i + 1, len(lst)):
                    if not lat.le_ids(lst[i], lst[j]) and not lat.le_ids(lst[j], lst[i]):
                        ok = False
                        break
                if not ok:
                    break
            self._supstar[key] = ok
            return ok

    def _gen(self, theta_vals):
        return generated_vals(self.G, self.lat, theta_vals)

    def _gen_sup_ok(self, theta_vals):
        """Level sets of the hull dominate hulls of level sets; equality
        under the sup-property."""
        try:
            return self._gen_sup[theta_vals]
        except KeyError:
            lat = self.lat
            G = self.G
            tip = self.bot
            for v in theta_vals:
                tip = lat.join_ids(tip, v)
            gv = self._gen(theta_vals)
            supstar = self._supstar_ids(frozenset(theta_vals))
            ok = True
            for b in range(self.m):
                if not lat.le_ids(b, tip):
                    continue
                lm = 0
                up = lat.up_mask(b)
                for x, v in enumerate(theta_vals):
                    if up >> v & 1:
                        lm |= 1 << x
                cl = G.closure_mask(lm)
                glm = 0
                for x, v in enumerate(gv):
                    if up >> v & 1:
                        glm |= 1 << x
                if cl & ~glm:
                    ok = False
                    break
                if supstar and cl != glm:
                    ok = False
                    break
            self._gen_sup[theta_vals] = ok
            return ok

    # per-subject precomputation -----------------------------------------
    def precompute_subjects(self):
        G, lat = self.G, self.lat
        n, m = self.n, self.m
        cf = G.conj_flat
        inv = G.inv
        top_ls = LSubset.constant(G, lat, lat.top)

        self.qmask = []  # [i][x] -> bitmask over lattice ids a with conj(eta, a_x) <= eta
        self.qsup = []   # [i][x][cap] -> sup of qualifying a below cap
        self.bad = []    # [i] -> points (a, x) where the abnormality test fails
        self.lvlconj_ok = []
        self.conjinv_ok = []

        for i, s in enumerate(self.subs):
            ev = s.vals
            tip = self.tips[i]

            qm = []
            for x in range(n):
                bits = 1 << self.bot
                base = x * n
                for a in range(m):
                    if a == self.bot:
                        continue
                    ok = True
                    for y in range(n):
                        if not lat.le_ids(lat.meet_ids(a, ev[cf[base + y]]), ev[y]):
                            ok = False
                            break
                    if ok:
                        bits |= 1 << a
                qm.append(bits)
            self.qmask.append(qm)
            qs = []
            for x in range(n):
                row = []
                bits = qm[x]
                for cap in range(m):
                    acc = self.bot
                    for a in range(m):
                        if bits >> a & 1 and lat.le_ids(a, cap):
                            acc = lat.join_ids(acc, a)
                    row.append(acc)
                qs.append(row)
            self.qsup.append(qs)

            bad = []
            for x in range(n):
                base = x * n
                for a in range(m):
                    if a == self.bot:
                        continue
                    uni = tuple(
                        lat.join_ids(ev[y], lat.meet_ids(a, ev[cf[base + y]]))
                        for y in range(n)
                    )
                    if not lat.le_ids(a, self._gen(uni)[x]):
                        bad.append((a, x))
            self.bad.append(bad)

            # level identity for conjugates: for all z and t <= tip(eta),
            # {x : eta(z x z^-1) >= t} must equal z^-1 (eta level t) z.
            ok = True
            for z in range(n):
                zi = inv[z]
                base = z * n
                for t in range(m):
                    if not lat.le_ids(t, tip):
                        continue
                    up = lat.up_mask(t)
                    lm = 0
                    for x in range(n):
                        if up >> ev[cf[base + x]] & 1:
                            lm |= 1 << x
                    em = self.lvl[i][t]
                    conj = 0
                    zbase = zi * n
                    for x in range(n):
                        if em >> x & 1:
                            conj |= 1 << cf[zbase + x]
                    if lm != conj:
                        ok = False
                        break
                if not ok:
                    break
            self.lvlconj_ok.append(ok)

            self.conjinv_ok.append(all(qm[x] == qm[inv[x]] for x in range(n)))

            two_way = is_lsubgroup(s, top_ls) and satisfies_axioms(s)
            self.note("lsubgroup-2way", two_way, lambda i=i: f"sub#{i} failed the dual subgroup check")

    # containment bitsets --------------------------------------------------
    def build_order(self):
        n, m = self.n, self.m
        nsubs = len(self.subs)
        lat = self.lat
        sle = [[0] * m for _ in range(n)]
        for idx, v in enumerate(self.vals):
            for x in range(n):
                vx = v[x]
                for cap in range(m):
                    if lat.le_ids(vx, cap):
                        sle[x][cap] |= 1 << idx
        down = []
        for j, v in enumerate(self.vals):
            acc = (1 << nsubs) - 1
            for x in range(n):
                acc &= sle[x][v[x]]
            down.append(acc)
        up = [0] * nsubs
        for j in range(nsubs):
            dj = down[j]
            while dj:
                low = dj & -dj
                up[low.bit_length() - 1] |= 1 << j
                dj ^= low
        self.down = down
        self.up = up

    # the pair scan --------------------------------------------------------
    def scan_pairs(self):
        for j, mu in enumerate(self.subs):
            mv = self.vals[j]
            img_j = self.images[j]
            dj = self.down[j]
            while dj:
                low = dj & -dj
                i = low.bit_length() - 1
                dj ^= low
                ev = self.vals[i]
                self._check_pair(i, j, ev, mv, img_j)

    def _check_pair(self, i, j, ev, mv, img_j):
        G, lat = self.G, self.lat
        n, m = self.n, self.m
        cf = G.conj_flat
        le = lat.le_ids
        meet = lat.meet_ids
        join = lat.join_ids
        bot = self.bot
        kern = G._kern
        pair = lambda: f"eta=sub#{i} mu=sub#{j}"

        # normality, three ways (the wu route honors the mutation test hook)
        wu = kern.wu_normal(n, m, ev, mv, cf, lat.leq_flat, lat.meet_flat)
        if theory_mod._MUTATION == "wu-flip":
            wu = not wu
        qm = self.qmask[i]
        by_conj = all(qm[z] >> mv[z] & 1 for z in range(n))
        by_lvl = True
        for t in range(m):
            em = self.lvl[i][t]
            if em and not self._is_normal_subgroup(self.lvl[j][t], em):
                by_lvl = False
                break
        self.note("normal-3way", wu == by_conj == by_lvl,
                  lambda: f"{pair()}: wu={wu} conjugates={by_conj} levels={by_lvl}")
        normal = wu

        # abnormality from the per-subject bad-point list
        witness = None
        for a, x in self.bad[i]:
            if le(a, mv[x]):
                witness = (a, x)
                break
        abnormal = witness is None

        # normalizer from per-subject capped sups
        qs = self.qsup[i]
        nvals = tuple(qs[x][mv[x]] for x in range(n))
        self_norm = nvals == ev

        proper = len(self.images[i]) > 1 and i != j

        if normal and abnormal:
            self.note("abn-nor", i == j, lambda: f"{pair()}: normal and abnormal but distinct")
        if abnormal:
            self.note("norm-abn", self_norm, lambda: f"{pair()}: abnormal but N(eta) != eta")

        # conjugate closure, two ways
        cc = tuple(kern.conjugate_closure_values(
            n, m, ev, mv, cf, G.inv, lat.meet_flat, lat.join_flat, bot))
        by_union = [bot] * n
        for z in range(n):
            mz = mv[z]
            base = z * n
            for x in range(n):
                t = meet(mz, ev[cf[base + x]])
                if not le(t, by_union[x]):
                    by_union[x] = join(by_union[x], t)
        self.note("cc-union", list(cc) == by_union,
                  lambda: f"{pair()}: conjugate closure differs from union of conjugates")

        nc = tuple(self._gen(cc))
        contranormal = nc == mv
        if abnormal:
            self.note("abn-contra", contranormal, lambda: f"{pair()}: abnormal but not contranormal")

        # subnormal defect via the normal closure series
        if ev == mv:
            defect = 0
        elif nc == ev:
            defect = 1
        elif nc == mv:
            defect = None  # series stabilized at mu above eta
        else:
            defect = None
            stage = nc
            for step in range(2, m * n + 2):
                cc2 = tuple(kern.conjugate_closure_values(
                    n, m, ev, stage, cf, G.inv, lat.meet_flat, lat.join_flat, bot))
                nxt = tuple(self._gen(cc2))
                if nxt == ev:
                    defect = step
                    break
                if nxt == stage:
                    break
                stage = nxt

        if contranormal:
            self.note("con-sub", (not normal) or ev == mv,
                      lambda: f"{pair()}: contranormal and normal but distinct")
            if proper:
                self.note("con-sub", defect is None,
                          lambda: f"{pair()}: proper contranormal with defect {defect}")

        # maximality dichotomies from the containment bitsets
        if proper:
            maximal = _popcount(self.up[i] & self.down[j]) == 2
            if maximal:
                self.note("max-dichotomy", normal or abnormal,
                          lambda: f"{pair()}: maximal but neither normal nor abnormal")
                self.note("max-dichotomy", normal or contranormal,
                          lambda: f"{pair()}: maximal but neither normal nor contranormal")

        # level identities, factored per subject
        self.note("lvl-conj", self.lvlconj_ok[i], lambda: f"sub#{i}: conjugate level sets mismatch")
        self.note("conj-inv", self.conjinv_ok[i], lambda: f"sub#{i}: containment not inverse-symmetric")
        if len(self.subs) <= 100:
            self._literal_lvl_conj(i, j, ev, mv, pair)

        # level characterizations of abnormal / contranormal
        tip_i, tip_j = self.tips[i], self.tips[j]
        if tip_i == tip_j:
            hyp = all(
                self._classical_abn(self.lvl[j][t], self.lvl[i][t])
                for t in range(m) if le(t, tip_i)
            )
            if hyp:
                self.note("levsub1", abnormal,
                          lambda: f"{pair()}: all levels abnormal, tips equal, subject not abnormal")
        if self.chain and abnormal:
            self.note("levsub1", all(
                self._classical_abn(self.lvl[j][t], self.lvl[i][t])
                for t in range(m) if le(t, tip_i)
            ), lambda: f"{pair()}: abnormal over a chain with a non-abnormal level")

        joint = self._supstar_ids(self.images[i] | img_j)
        if self.chain and joint and contranormal:
            self.note("lev-contra", all(
                self._classical_con(self.lvl[j][t], self.lvl[i][t])
                for t in range(m) if le(t, tip_i)
            ), lambda: f"{pair()}: contranormal over a chain with a non-contranormal level")
        if tip_i == tip_j:
            hyp = all(
                self._classical_con(self.lvl[j][t], self.lvl[i][t])
                for t in range(m) if le(t, tip_i)
            )
            if hyp:
                self.note("lev-contra", contranormal,
                          lambda: f"{pair()}: all levels contranormal, tips equal, subject not contranormal")

        # image lemmas for conjugates and closures
        if joint:
            imgs = self.images[i] | img_j
            for x in range(n):
                base = x * n
                for a in img_j:
                    if a == bot or not le(a, mv[x]):
                        continue
                    conj_img = {meet(a, ev[cf[base + y]]) for y in range(n)}
                    self.note("conj-sup", conj_img <= imgs,
                              lambda a=a, x=x: f"{pair()}: Im of conjugate by {a}_{x} escapes")
                    uni = tuple(join(ev[y], meet(a, ev[cf[base + y]])) for y in range(n))
                    self.note("conj-sup", self._supstar_ids(frozenset(uni)),
                              lambda a=a, x=x: f"{pair()}: union with conjugate by {a}_{x} lacks sup-property")
            self.note("nc-sup", set(cc) <= imgs,
                      lambda: f"{pair()}: Im of conjugate closure escapes the image union")
            if self.chain:
                self.note("nc-sup", self._supstar_ids(frozenset(cc)),
                          lambda: f"{pair()}: conjugate closure lacks sup-property over a chain")

        # generated-hull/level interaction on subject, closure, and unions
        self.note("gen-sup", self._gen_sup_ok(ev), lambda: f"sub#{i}: gen/level mismatch")
        self.note("gen-sup", self._gen_sup_ok(cc), lambda: f"{pair()}: gen/level mismatch on closure")
        for x in range(n):
            a = mv[x]
            base = x * n
            uni = tuple(join(ev[y], meet(a, ev[cf[base + y]])) for y in range(n))
            self.note("gen-sup", self._gen_sup_ok(uni),
                      lambda x=x: f"{pair()}: gen/level mismatch on union at element {x}")

    def _literal_lvl_conj(self, i, j, ev, mv, pair):
        """Point-level form of the conjugate level identity, on small instances."""
        G, lat = self.G, self.lat
        n, m = self.n, self.m
        cf = G.conj_flat
        inv = G.inv
        le = lat.le_ids
        for a, z in lpoints(self.subs[j]):
            cv = _conj_vals(G, lat, ev, a, z)
            ctip = lat.meet_ids(a, self.tips[i])
            zbase = inv[z] * n
            for t in range(m):
                if not le(t, ctip):
                    continue
                up = lat.up_mask(t)
                lm = 0
                for x in range(n):
                    if up >> cv[x] & 1:
                        lm |= 1 << x
                em = self.lvl[i][t]
                conj = 0
                for x in range(n):
                    if em >> x & 1:
                        conj |= 1 << cf[zbase + x]
                self.note("lvl-conj", lm == conj,
                          lambda a=a, z=z, t=t: f"{pair()}: level {t} of conjugate by {a}_{z} mismatch")

    # homomorphism cases ---------------------------------------------------
    def hom_cases(self):
        f = identity_hom(self.G)
        self._hom_pass(f, self.subs, full=False)
        if self.key == "S4x2":
            s3 = inst.s3()
            q = hom_from_images(
                self.G, s3,
                [(self.G.element("(1 2)"), s3.element("(1 2)")),
                 (self.G.element("(1 2 3 4)"), s3.element("(1 3)"))],
            )
            self._hom_pass(q, self.subs, full=True)
            self._hom_preimage_pass(q)

    def _hom_pass(self, f, subs, full):
        lat = self.lat
        m = self.m
        n = self.n
        H = f.target
        le = lat.le_ids
        for i, s in enumerate(subs):
            fs = image(f, s)
            # hom_lev: f(eta_t) <= f(eta)_t for t <= tip
            ok = True
            for t in range(m):
                if not le(t, self.tips[i]):
                    continue
                em = s.level_mask(t)
                img = 0
                for x in range(n):
                    if em >> x & 1:
                        img |= 1 << f.mapping[x]
                if img & ~fs.level_mask(t):
                    ok = False
                    break
            self.note("hom-lev", ok, lambda i=i: f"sub#{i}: f(level) escapes level of image")

            # hom_conj: f(eta^{a_z}) = f(eta)^{a_{f(z)}}
            points = lpoints(s) if full else ((self.tips[i], z) for z in range(n))
            for a, z in points:
                lhs = image(f, LSubset(self.G, lat, _conj_vals(self.G, lat, s.vals, a, z)))
                rhs = _conj_vals(H, lat, fs.vals, a, f.mapping[z])
                self.note("hom-conj", lhs.vals == tuple(rhs),
                          lambda i=i, a=a, z=z: f"sub#{i}: image of conjugate by {a}_{z} mismatch")

            # gen_hom: <f(eta)> = f(<eta>)
            lhs = generated_vals(H, lat, fs.vals)
            rhs = image(f, LSubset(self.G, lat, self._gen(s.vals))).vals
            self.note("gen-hom", tuple(lhs) == rhs, lambda i=i: f"sub#{i}: <f(.)> != f(<.>)")

        if full:
            # unions of pairs give non-subgroup subjects
            for i in range(len(subs)):
                for k in range(i + 1, len(subs)):
                    uni = tuple(
                        lat.join_ids(a, b) for a, b in zip(subs[i].vals, subs[k].vals)
                    )
                    fu = image(f, LSubset(self.G, lat, uni))
                    lhs = tuple(generated_vals(H, lat, fu.vals))
                    rhs = image(f, LSubset(self.G, lat, self._gen(uni))).vals
                    self.note("gen-hom", lhs == rhs,
                              lambda i=i, k=k: f"union sub#{i}|sub#{k}: <f(.)> != f(<.>)")
            # hom_abn: surjective image of an abnormal subject stays abnormal
            top_h = LSubset.constant(f.target, lat, lat.top)
            for j, mu in enumerate(subs):
                if not self._supstar_ids(self.images[j]):
                    continue
                fmu = image(f, mu)
                dj = self.down[j]
                while dj:
                    low = dj & -dj
                    i = low.bit_length() - 1
                    dj ^= low
                    witness = None
                    for a, x in self.bad[i]:
                        if self.lat.le_ids(a, mu.vals[x]):
                            witness = (a, x)
                            break
                    if witness is None:
                        feta = image(f, subs[i])
                        self.note("hom-abn", is_abnormal(feta, fmu, check=False),
                                  lambda i=i, j=j: f"eta=sub#{i} mu=sub#{j}: image not abnormal")

    def _hom_preimage_pass(self, f):
        lat = self.lat
        H = f.target
        top_h = LSubset.constant(H, lat, lat.top)
        hsubs = enumerate_lsubgroups(top_h)
        items = [s.vals for s in hsubs]
        for i in range(len(hsubs)):
            for k in range(i, len(hsubs)):
                uni = tuple(lat.join_ids(a, b) for a, b in zip(items[i], items[k]))
                pre = preimage(f, LSubset(H, lat, uni))
                lhs = tuple(generated_vals(self.G, lat, pre.vals))
                rhs = preimage(f, LSubset(H, lat, generated_vals(H, lat, uni))).vals
                self.note("gen-hom", lhs == rhs,
                          lambda i=i, k=k: f"preimage of union #{i}|#{k}: <f^-1(.)> != f^-1(<.>)")

    def results(self):
        out = []
        for t in THEOREMS:
            nfail = len(self.viol[t])
            if self.checked[t] == 0:
                out.append(CaseResult(f"{t}[{self.key}]", "pass", "no applicable pairs", "vacuous"))
            elif nfail == 0:
                out.append(CaseResult(
                    f"{t}[{self.key}]", "pass",
                    "zero violations", f"{self.checked[t]} checks"))
            else:
                out.append(CaseResult(
                    f"{t}[{self.key}]", "fail", "zero violations",
                    f"violations: {'; '.join(self.viol[t])}"))
        return out


def run_theorem_instance(key, budget=DEFAULT_BUDGET):
    defs = {k: (g, l) for k, g, l in THEOREM_INSTANCES}
    gname, lname = defs[key]
    G = getattr(inst, gname)()
    lat = getattr(inst, lname)()
    top = LSubset.constant(G, lat, lat.top)
    try:
        subs = enumerate_lsubgroups(top, budget=budget)
    except BudgetExceeded:
        return [CaseResult(f"{t}[{key}]", "skip", "", "enumeration budget exceeded")
                for t in THEOREMS]
    chk = _TheoremChecker(key, G, lat, subs)
    chk.precompute_subjects()
    chk.build_order()
    chk.scan_pairs()
    chk.hom_cases()
    out = chk.results()
    for attr in ("_gen_cache", "_sup_cache"):
        cache = getattr(G, attr, None)
        if cache is not None:
            cache.clear()
    return out


def _workers():
    env = os.environ.get("LGROUP_WORKERS")
    cpus = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cpus))
        except ValueError:
            return 1
    return cpus


def run_theorems(budget=DEFAULT_BUDGET):
    keys = [k for k, _, _ in THEOREM_INSTANCES]
    workers = min(_workers(), len(keys))
    results = {}
    if workers > 1:
        try:
            with futures.ProcessPoolExecutor(max_workers=workers) as pool:
                futs = {pool.submit(run_theorem_instance, k, budget): k for k in keys}
                for fut in futures.as_completed(futs):
                    results[futs[fut]] = fut.result()
        except (OSError, futures.process.BrokenProcessPool):
            results = {}
    if not results:
        for k in keys:
            results[k] = run_theorem_instance(k, budget)
    cases = []
    for k in keys:
        cases.extend(results[k])
    return cases


# ---------------------------------------------------------------------------
# paper-examples suite


def _case(case_id, ok, expected, actual):
    return CaseResult(case_id, "pass" if ok else "fail", expected, actual)


def run_paper_examples(budget=DEFAULT_BUDGET):
    from . import theory
    from .lsub import LPoint, generated, union

    cases = []
    G, M = inst.s4(), inst.lattice_m()
    mu1, eta1 = inst.example1()

    # worked conjugate table of the first example
    conj = theory.conjugate(eta1, LPoint(M.element("d"), G.element("(3 4)")), mu1)
    h12 = G.closure_mask(G.mask_of(["(1 2)"]))
    H1 = G.closure_mask(G.mask_of(["(1 2)", "(1 3)"]))
    H2 = G.closure_mask(G.mask_of(["(1 2)", "(1 4)"]))
    def expect1(x):
        b = 1 << x.id
        if b & h12:
            return "d"
        if b & H2:
            return "a"
        if b & H1:
            return "b"
        return "l"
    bad = [(repr(x), conj.value_of(x).name, expect1(x))
           for x in G.elements if conj.value_of(x).name != expect1(x)]
    gen34 = generated(union(eta1, conj), mu1).value_of(G.element("(3 4)")).name
    cases.append(_case("ex1-conjugate-table", not bad and gen34 == "d",
                       "table d/a/b/l by coset, hull value d at (3 4)",
                       f"mismatches={bad[:3]} hull((3 4))={gen34}"))

    w = theory._abnormal_witness(eta1, mu1)
    cases.append(_case(
        "ex1-abnormality", w is None, "abnormal at every point of the parent",
        "abnormal" if w is None else
        f"fails at point {M.elements[w[0]].name}_{G.elements[w[1]]!r}"))

    nz = theory.normalizer(eta1, mu1)
    n23 = nz.value_of(G.element("(2 3)")).name
    diffs = [(repr(x), nz.value_of(x).name, eta1.value_of(x).name)
             for x in G.elements if nz.vals[x.id] != eta1.vals[x.id]]
    cases.append(_case("ex2-normalizer", not diffs and n23 == "a",
                       "N(eta) = eta pointwise and N(eta)((2 3)) = a",
                       f"N((2 3))={n23}; diffs={diffs[:3]}"))

    M2 = inst.m_times_2()
    mu3, eta3 = inst.example3()
    ok_sub = is_lsubgroup(eta3, mu3)
    cases.append(_case("ex3-lsubgroup", ok_sub, "eta is an L-subgroup of mu", str(ok_sub)))
    nrm = theory.is_normal(eta3, mu3)
    cases.append(_case("ex3-not-normal", not nrm, "not normal (dihedral levels)", f"normal={nrm}"))

    conj3 = theory.conjugate(eta3, LPoint(M2.element("(d,0)"), G.element("(1 2 3)")), mu3)
    v4 = G.closure_mask(G.mask_of(["(1 2)(3 4)", "(1 3)(2 4)"]))
    d1 = G.closure_mask(G.mask_of(["(2 4)", "(1 2 3 4)"]))
    d2 = G.closure_mask(G.mask_of(["(1 2)", "(1 3 2 4)"]))
    d3 = G.closure_mask(G.mask_of(["(2 3)", "(1 3 4 2)"]))
    def expect3(x):
        b = 1 << x.id
        if b & v4:
            return "(d,0)"
        if b & d1:
            return "(b,0)"
        if b & d2:
            return "(c,0)"
        if b & d3:
            return "(a,0)"
        return "(f,0)"
    bad3 = [(repr(x), conj3.value_of(x).name, expect3(x))
            for x in G.elements if conj3.value_of(x).name != expect3(x)]
    cases.append(_case("ex3-conjugate-table", not bad3,
                       "cyclic shift of the dihedral values under (1 2 3)",
                       f"mismatches={bad3[:3]}"))

    mx = theory.is_maximal(eta3, mu3, budget=budget)
    cases.append(_case("ex3-maximal", mx is True, "maximal within budget", str(mx)))

    nc = theory.normal_closure(eta1, mu1)
    cases.append(_case("ex4-normal-closure", nc == mu1,
                       "normal closure equals the parent", "equal" if nc == mu1 else "proper"))

    cc = theory.conjugate_closure(eta1, mu1)
    sols, _, status = theory._interval_search(cc, mu1, budget, 1 << 62)
    ok = status == "done" and [tuple(mu1.vals)] == sols
    cases.append(_case("ex4-container-crosscheck", ok,
                       "the parent is the only L-subgroup containing every conjugate",
                       f"status={status} containers={len(sols)}"))
    return cases


# ---------------------------------------------------------------------------
# crisp-bridge suite


def run_crisp_group(name, gname):
    G = getattr(inst, gname)()
    lat = inst.chain2()
    subs = all_subgroups(G)
    abn_bad = []
    con_bad = []
    checked = 0
    lifted = {h: characteristic(G, lat, h) for h in subs}
    for k in subs:
        for h in subs:
            if h & ~k:
                continue
            checked += 1
            ls_abn = is_abnormal(lifted[h], lifted[k], check=False)
            cl_abn = classical_is_abnormal(G, k, h)
            if ls_abn != cl_abn and len(abn_bad) < 3:
                abn_bad.append(f"|H|={_popcount(h)} |K|={_popcount(k)} lifted={ls_abn} classical={cl_abn}")
            ls_con = is_contranormal(lifted[h], lifted[k], check=False)
            cl_con = classical_is_contranormal(G, k, h)
            if ls_con != cl_con and len(con_bad) < 3:
                con_bad.append(f"|H|={_popcount(h)} |K|={_popcount(k)} lifted={ls_con} classical={cl_con}")
    return [
        CaseResult(f"crisp-abnormal[{name}]", "pass" if not abn_bad else "fail",
                   "agreement on every nested subgroup pair",
                   f"{checked} pairs" if not abn_bad else "; ".join(abn_bad)),
        CaseResult(f"crisp-contranormal[{name}]", "pass" if not con_bad else "fail",
                   "agreement on every nested subgroup pair",
                   f"{checked} pairs" if not con_bad else "; ".join(con_bad)),
    ]


def run_crisp_bridge(budget=DEFAULT_BUDGET):
    cases = []
    for name, gname in CRISP_GROUPS:
        cases.extend(run_crisp_group(name, gname))
    return cases


# ---------------------------------------------------------------------------


def run_suite(name, budget=DEFAULT_BUDGET):
    t0 = time.perf_counter()
    if name == "paper-examples":
        cases = run_paper_examples(budget)
    elif name == "theorems":
        cases = run_theorems(budget)
    elif name == "crisp-bridge":
        cases = run_crisp_bridge(budget)
    else:
        raise LGroupError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    wall = (time.perf_counter() - t0) * 1000.0
    passed = sum(1 for c in cases if c.status == "pass")
    skipped = sum(1 for c in cases if c.status == "skip")
    failures = [(c.case_id, c.expected, c.actual) for c in cases if c.status == "fail"]
    return SuiteResult(
        suite=name,
        cases_run=len(cases) - skipped,
        cases_passed=passed,
        cases_skipped=skipped,
        failures=failures,
        wall_ms=wall,
        cases=cases,
    )
