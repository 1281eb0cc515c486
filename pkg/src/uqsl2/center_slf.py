"""Center of the small quantum group and the symmetric linear forms.

The center has dimension 3p-1 with canonical basis e_0, ..., e_p,
w^+_1, ..., w^+_{p-1}, w^-_1, ..., w^-_{p-1}.  The space of symmetric
linear forms has the same dimension and carries the GTA basis
chi^+_1, ..., chi^+_p, chi^-_1, ..., chi^-_p, G_1, ..., G_{p-1} built
from traces on the simple modules and on the projective covers.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import CycNum
from .linalg import ExactMatrix
from .uq_algebra import AlgElem, DualForm, UqAlgebra
from .uq_modules import Module, proj_module, simple_module


class CoordVec:
    """Coefficient vector over a fixed labeled basis."""

    __slots__ = ("field", "labels", "coords")

    def __init__(self, fld, labels, coords):
        coords = list(coords)
        if len(coords) != len(labels):
            raise ValueError("coordinate vector has wrong length")
        self.field = fld
        self.labels = labels
        self.coords = coords

    def __getitem__(self, key):
        if isinstance(key, str):
            return self.coords[self.labels.index(key)]
        return self.coords[key]

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, CoordVec):
            return NotImplemented
        return self.labels == other.labels and self.coords == other.coords

    def __hash__(self):
        return None

    def is_zero(self):
        return all(not c for c in self.coords)

    def to_json(self):
        return {lab: c.to_json() for lab, c in zip(self.labels, self.coords)
                if c}

    def __repr__(self):
        bits = [f"({c!r})*{lab}" for lab, c in zip(self.labels, self.coords)
                if c]
        return " + ".join(bits) if bits else "0"


def center_labels(p: int):
    return ([f"e{s}" for s in range(p + 1)]
            + [f"w+{t}" for t in range(1, p)]
            + [f"w-{t}" for t in range(1, p)])


def gta_labels(p: int):
    return ([f"chi+{s}" for s in range(1, p + 1)]
            + [f"chi-{s}" for s in range(1, p + 1)]
            + [f"G{s}" for s in range(1, p)])


def phi_weight(alg: UqAlgebra, alpha: int, n: int) -> AlgElem:
    """Discrete Fourier transform Phi^alpha_n = (1/2p) sum_l (alpha q^-n)^l K^l;
    it projects a module onto its weight space alpha*q^n."""
    F = alg.field
    out = alg.zero_elem()
    inv2p = F.from_int(2 * alg.p).inverse()
    for l in range(2 * alg.p):
        c = inv2p * F.q_pow(-n * l)
        if alpha == -1 and l % 2 == 1:
            c = -c
        out = out + alg.monomial(0, 0, 2 * l, c)
    return out


class CenterBasis:
    """Canonical basis of the center, constructed as the kernel of the
    adjoint action and pinned down by its action on simples and PIMs."""

    def __init__(self, alg: UqAlgebra):
        self.alg = alg
        self.labels = center_labels(alg.p)
        self.elements = self._build()
        self._pbw = ExactMatrix.from_rows(
            alg.field,
            [[z.pbw_vector()[i] for z in self.elements]
             for i in range(alg.dim)])

    # -- construction ------------------------------------------------------

    def _build(self):
        alg = self.alg
        p, F = alg.p, alg.field
        # Central elements commute with K, hence live in the weight-zero
        # span of the monomials E^m F^m K^l.
        mons = [(m, m, l) for m in range(p) for l in range(2 * p)]
        rows = [[F.zero] * len(mons) for _ in range(2 * alg.dim)]
        for j, (m, n, l) in enumerate(mons):
            z = alg.monomial(m, n, 2 * l)
            for gen, off in ((alg.E, 0), (alg.F, alg.dim)):
                comm = (gen * z - z * gen).pbw_vector()
                for i, c in enumerate(comm):
                    if c:
                        rows[off + i][j] = c
        ker = ExactMatrix.from_rows(F, rows).kernel()
        if ker.shape[1] != 3 * p - 1:
            raise RuntimeError("center dimension is not 3p-1")
        raw = []
        kr = ker.rows_as_cyc()
        for j in range(ker.shape[1]):
            terms = {}
            for i, (m, n, l) in enumerate(mons):
                if kr[i][j]:
                    terms[(m, n, 2 * l)] = kr[i][j]
            raw.append(AlgElem(alg, terms))
        return self._identify(raw)

    def _identify(self, raw):
        """Solve for the elements whose action on the top vectors of the
        simples and the PIMs matches the canonical basis."""
        alg = self.alg
        p, F = alg.p, alg.field
        simples = {a: simple_module(alg, a, p) for a in (1, -1)}
        pims = {(a, s): proj_module(alg, a, s)
                for a in (1, -1) for s in range(1, p)}

        def functionals(z):
            out = [simples[1].rep(z).entry(0, 0),
                   simples[-1].rep(z).entry(0, 0)]
            for a in (1, -1):
                for s in range(1, p):
                    P = pims[(a, s)]
                    col_b = P.rep(z).entry(0, 0)
                    a0 = 2 * p - s  # index of a_0 in the standard basis
                    col_a = P.rep(z).entry(a0, 0)
                    out.extend([col_b, col_a])
            return out

        nfun = 2 + 4 * (p - 1)
        cols = [functionals(z) for z in raw]
        A = ExactMatrix.from_rows(
            F, [[col[i] for col in cols] for i in range(nfun)])

        def target(fn):
            vec = [F.zero] * nfun
            fn(vec)
            return vec

        def pos(a, s, part):
            # offset of the (b0, a0) functional pair of P^a(s)
            base = 2 + (0 if a == 1 else 2 * (p - 1)) + 2 * (s - 1)
            return base + (0 if part == "b" else 1)

        targets = []
        for s in range(p + 1):
            def fn(vec, s=s):
                if s == 0:
                    vec[1] = F.one
                elif s == p:
                    vec[0] = F.one
                else:
                    vec[pos(1, s, "b")] = F.one
                    vec[pos(-1, p - s, "b")] = F.one
            targets.append(target(fn))
        for a in (1, -1):
            for t in range(1, p):
                def fn(vec, a=a, t=t):
                    s = t if a == 1 else p - t
                    vec[pos(a, s, "a")] = F.one
                targets.append(target(fn))
        T = ExactMatrix.from_rows(F, [[targets[j][i] for j in range(len(targets))]
                                      for i in range(nfun)])
        X = A.solve_tall(T)
        xr = X.rows_as_cyc()
        out = []
        for j in range(len(targets)):
            z = alg.zero_elem()
            for i, r in enumerate(raw):
                if xr[i][j]:
                    z = z + xr[i][j] * r
            out.append(z)
        return out

    # -- coordinates -------------------------------------------------------

    def __getitem__(self, key) -> AlgElem:
        if isinstance(key, str):
            return self.elements[self.labels.index(key)]
        return self.elements[key]

    def decompose(self, z: AlgElem) -> CoordVec:
        F = self.alg.field
        col = ExactMatrix.from_rows(F, [[c] for c in z.pbw_vector()])
        X = self._pbw.solve_tall(col)
        return CoordVec(F, self.labels,
                        [X.entry(i, 0) for i in range(len(self.labels))])

    def combine(self, vec) -> AlgElem:
        coords = vec.coords if isinstance(vec, CoordVec) else list(vec)
        z = self.alg.zero_elem()
        for c, e in zip(coords, self.elements):
            if c:
                z = z + c * e
        return z

    def casimir_vec(self) -> CoordVec:
        return self.decompose(self.alg.casimir())

    def casimir_span_dim(self) -> int:
        """Dimension of the unital subalgebra generated by the Casimir."""
        alg = self.alg
        n = len(self.labels)
        powers = []
        C = alg.casimir()
        x = alg.unit()
        for _ in range(n):
            powers.append(self.decompose(x).coords)
            x = x * C
        return ExactMatrix.from_rows(alg.field, powers).rank()


@lru_cache(maxsize=None)
def _center_cache(p: int) -> CenterBasis:
    from .uq_algebra import algebra
    return CenterBasis(algebra(p))


def center_basis(alg: UqAlgebra) -> CenterBasis:
    return _center_cache(alg.p)


class GtaBasis:
    """The GTA basis of the symmetric linear forms, with coordinate
    extraction and the multiplication table."""

    def __init__(self, alg: UqAlgebra):
        self.alg = alg
        p = alg.p
        self.labels = gta_labels(p)
        self.center = center_basis(alg)
        forms = []
        for a in (1, -1):
            for s in range(1, p + 1):
                forms.append(simple_module(alg, a, s).character())
        for s in range(1, p):
            forms.append(self._g_form(s))
        self.forms = forms
        # evaluation data for the coordinate formulas
        self._probes = self._probe_elements()

    def _g_form(self, s: int) -> DualForm:
        """G_s(x) = tr(sigma_s x) on P^+(s) plus tr(sigma_{p-s} x) on
        P^-(p-s), where sigma picks the a-block against the b-block."""
        alg = self.alg
        p, F = alg.p, alg.field
        vals = [F.zero] * alg.dim
        for P, top in ((proj_module(alg, 1, s), s),
                       (proj_module(alg, -1, p - s), p - s)):
            a0 = 2 * p - top
            for idx, (m, n, l) in enumerate(alg.basis):
                mat = P.rep_tensor_leg((m, n, 2 * l))
                acc = F.zero
                for i in range(top):
                    acc = acc + mat.entry(a0 + i, i)
                vals[idx] = vals[idx] + acc
        return DualForm(alg, vals)

    def _probe_elements(self):
        alg = self.alg
        p = alg.p
        probes = []
        for s in range(1, p + 1):
            probes.append(phi_weight(alg, 1, s - 1) * self.center[f"e{s}"])
        for s in range(1, p + 1):
            es = self.center["e0"] if s == p else self.center[f"e{p - s}"]
            probes.append(phi_weight(alg, -1, s - 1) * es)
        for s in range(1, p):
            probes.append(self.center[f"w+{s}"])
        return probes

    def __getitem__(self, key) -> DualForm:
        if isinstance(key, str):
            return self.forms[self.labels.index(key)]
        return self.forms[key]

    def coords(self, phi: DualForm) -> CoordVec:
        """Coordinates in the GTA basis of a symmetric form, read off by
        evaluation against weight projectors and canonical central elements."""
        if not phi.is_symmetric():
            raise ValueError("coordinates are defined for symmetric forms")
        alg = self.alg
        p, F = alg.p, alg.field
        out = []
        for i in range(2 * p):
            out.append(phi.evaluate(self._probes[i]))
        for s in range(1, p):
            out.append(phi.evaluate(self._probes[2 * p + s - 1])
                       * F.from_int(s).inverse())
        vec = CoordVec(F, self.labels, out)
        if not (self.combine(vec) == phi):
            raise RuntimeError("reconstruction residual is nonzero")
        return vec

    def combine(self, vec) -> DualForm:
        coords = vec.coords if isinstance(vec, CoordVec) else list(vec)
        phi = DualForm.zero(self.alg)
        for c, f in zip(coords, self.forms):
            if c:
                phi = phi + f.scale(c)
        return phi

    def product(self, u, v) -> CoordVec:
        """Product in SLF, computed through the dual product and decomposed
        back into GTA coordinates."""
        fu = u if isinstance(u, DualForm) else self.combine(u)
        fv = v if isinstance(v, DualForm) else self.combine(v)
        return self.coords(fu * fv)

    def unit_vec(self) -> CoordVec:
        F = self.alg.field
        return CoordVec(F, self.labels,
                        [F.one if lab == "chi+1" else F.zero
                         for lab in self.labels])

    def product_table(self):
        """Full (3p-1) x (3p-1) multiplication table as CoordVecs."""
        n = len(self.labels)
        return [[self.product(self.forms[i], self.forms[j]) for j in range(n)]
                for i in range(n)]


@lru_cache(maxsize=None)
def _gta_cache(p: int) -> GtaBasis:
    from .uq_algebra import algebra
    return GtaBasis(algebra(p))


def gta_basis(alg: UqAlgebra) -> GtaBasis:
    return _gta_cache(alg.p)
