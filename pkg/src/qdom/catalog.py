"""Catalog of algebra presentations.

Each entry builds a `Presentation` with rules oriented so that rewriting
terminates (total degree, then position-lexicographic order, with the
projector and cancellation rules decreasing under a secondary length
order).  Starred blocks are listed in reversed position order, which makes
the involution image of an oriented rule again an oriented rule, so the
starred and derived relations are generated mechanically.
"""

from __future__ import annotations

from fractions import Fraction

from .ncalg import GeneratorInfo, NCPoly, Presentation, solve_linear
from .scalars import ONE, ZERO, Q, Scalar, qpow

LAM = Q - Q.inverse()  # q - q^{-1}


class CatalogError(KeyError):
    pass


def _w(*idx) -> NCPoly:
    return NCPoly.word(tuple(idx))


def _close_rules_under_star(rules, involution):
    """Add the involution image of every rule whose image pattern is new."""

    def star_letter(i):
        s, w = involution[i]
        if len(w) != 1 or not s.is_one():
            raise ValueError("involution must map generators to generators here")
        return w[0]

    added = True
    while added:
        added = False
        for (a, b), rhs in list(rules.items()):
            pat = (star_letter(b), star_letter(a))
            if pat in rules:
                continue
            img = NCPoly()
            for w, c in rhs.terms.items():
                img.add_term(tuple(star_letter(i) for i in reversed(w)), c)
            rules[pat] = img
            added = True
    return rules


# ---------------------------------------------------------------------------
# disc family
# ---------------------------------------------------------------------------

def _pol_disc() -> Presentation:
    gens = [GeneratorInfo("z", degree=(1,)), GeneratorInfo("z'", degree=(-1,))]
    rules = {(1, 0): _w(0, 1).scale(Q ** 2) + NCPoly.unit(ONE - Q ** 2)}
    inv = {0: (ONE, (1,)), 1: (ONE, (0,))}
    return Presentation("pol_disc", gens, rules, involution=inv)


def _fun_disc() -> Presentation:
    gens = [GeneratorInfo("z", degree=(1,)),
            GeneratorInfo("f0", degree=(0,)),
            GeneratorInfo("z'", degree=(-1,))]
    z, f0, zs = 0, 1, 2
    rules = {
        (zs, z): _w(z, zs).scale(Q ** 2) + NCPoly.unit(ONE - Q ** 2),
        (zs, f0): NCPoly.zero(),
        (f0, z): NCPoly.zero(),
        (f0, f0): _w(f0),
    }
    inv = {z: (ONE, (zs,)), f0: (ONE, (f0,)), zs: (ONE, (z,))}
    return Presentation("fun_disc", gens, rules, involution=inv)


def _disc_dz_rules(z, zs, dz, dzs):
    return {
        (dz, z): _w(z, dz).scale(Q ** 2),
        (dz, zs): _w(zs, dz).scale(Q ** -2),
        (dzs, z): _w(z, dzs).scale(Q ** 2),
        (dzs, zs): _w(zs, dzs).scale(Q ** -2),
        (dz, dz): NCPoly.zero(),
        (dzs, dzs): NCPoly.zero(),
        (dzs, dz): _w(dz, dzs).scale(-(Q ** 2)),
    }


def _omega_disc() -> Presentation:
    gens = [GeneratorInfo("z", degree=(1, 0)),
            GeneratorInfo("f0", degree=(0, 0)),
            GeneratorInfo("z'", degree=(-1, 0)),
            GeneratorInfo("dz", parity=1, degree=(1, 1)),
            GeneratorInfo("dz'", parity=1, degree=(-1, 1))]
    z, f0, zs, dz, dzs = range(5)
    rules = {
        (zs, z): _w(z, zs).scale(Q ** 2) + NCPoly.unit(ONE - Q ** 2),
        (zs, f0): NCPoly.zero(),
        (f0, z): NCPoly.zero(),
        (f0, f0): _w(f0),
        (dz, f0): _w(f0, dz),
        (dzs, f0): _w(f0, dzs),
    }
    rules.update(_disc_dz_rules(z, zs, dz, dzs))
    inv = {z: (ONE, (zs,)), zs: (ONE, (z,)), f0: (ONE, (f0,)),
           dz: (ONE, (dzs,)), dzs: (ONE, (dz,))}
    c = -(ONE - Q ** 2).inverse()
    dmap = {
        z: _w(dz),
        zs: _w(dzs),
        f0: (_w(dz, f0, zs) + _w(z, f0, dzs)).scale(c),
        dz: NCPoly.zero(),
        dzs: NCPoly.zero(),
    }
    pres = Presentation("omega_disc", gens, rules, involution=inv, dmap=dmap)
    # store df0 in normal form
    pres.dmap[f0] = pres.normal_form(pres.dmap[f0])
    return pres


def _clifford_disc() -> Presentation:
    gens = [GeneratorInfo("z", degree=(1,)),
            GeneratorInfo("z'", degree=(-1,)),
            GeneratorInfo("dz", parity=1, degree=(1,)),
            GeneratorInfo("dz'", parity=1, degree=(-1,))]
    z, zs, dz, dzs = range(4)
    rules = {(zs, z): _w(z, zs).scale(Q ** 2) + NCPoly.unit(ONE - Q ** 2)}
    rules.update(_disc_dz_rules(z, zs, dz, dzs))
    # Clifford pairing: dz'.dz + dz.dz' = q^{-2}(1-zz')^2.  A q^2 on the
    # dz.dz' term together with dz.dz = 0 fails the diamond lemma (the
    # overlap dz'.dz.dz would force (1-q^2)(1-zz')^2 dz = 0), so the
    # coefficient is fixed by consistency; the q^{-2} scale reproduces
    # dz.dz' = q^{-2}(1-zz')^2 in the module over the polynomial part.
    ysq = (NCPoly.unit() - _w(z, zs).scale(ONE + Q ** 2)
           + _w(z, z, zs, zs).scale(Q ** 2))
    rules[(dzs, dz)] = _w(dz, dzs).scale(-ONE) + ysq.scale(Q ** -2)
    inv = {z: (ONE, (zs,)), zs: (ONE, (z,)), dz: (ONE, (dzs,)), dzs: (ONE, (dz,))}
    return Presentation("clifford_disc", gens, rules, involution=inv)


def _weyl_disc() -> Presentation:
    gens = [GeneratorInfo("zh", degree=(1,)), GeneratorInfo("ddz", degree=(-1,))]
    rules = {(1, 0): _w(0, 1).scale(Q ** -2) + NCPoly.unit()}
    return Presentation("weyl_disc", gens, rules)


# ---------------------------------------------------------------------------
# quantum matrix space C[Mat_{m,n}]_q and friends
# ---------------------------------------------------------------------------

def _mat_idx(m):
    def idx(a, al):  # rows a = 1..n, columns al = 1..m, row-major
        return (a - 1) * m + (al - 1)
    return idx


def _cmat_gen_names(m, n, fmt="z[%d,%d]"):
    return [fmt % (a, al) for a in range(1, n + 1) for al in range(1, m + 1)]


def _cmat_rules(m, n, offset=0):
    """Oriented relations of C[Mat_{m,n}]_q on generators offset..offset+nm-1."""
    idx = _mat_idx(m)
    rules = {}
    pairs = [(a, al) for a in range(1, n + 1) for al in range(1, m + 1)]
    for (a, al) in pairs:
        for (b, be) in pairs:
            if idx(a, al) >= idx(b, be):
                continue
            x = offset + idx(a, al)
            y = offset + idx(b, be)
            if (a == b and al < be) or (a < b and al == be):
                rules[(y, x)] = _w(x, y).scale(Q.inverse())
            elif a < b and al > be:
                rules[(y, x)] = _w(x, y)
            else:  # a < b and al < be
                u = offset + idx(a, be)
                v = offset + idx(b, al)
                rules[(y, x)] = _w(x, y) - _w(u, v).scale(LAM)
    return rules


def cmat(m: int, n: int) -> Presentation:
    gens = [GeneratorInfo(nm, degree=(1,)) for nm in _cmat_gen_names(m, n)]
    return Presentation("cmat", gens, _cmat_rules(m, n))


def _rhat(b, a, bp, ap):
    if a != b and b == bp and a == ap:
        return ONE
    if a == b == ap == bp:
        return Q
    if a == b and ap == bp and ap > a:
        return LAM
    return ZERO


def _r_cont(b, a, bp, ap):
    if a != b and b == bp and a == ap:
        return Q.inverse()
    if a == b == ap == bp:
        return ONE
    if a == b and ap == bp and ap > a:
        return -(Q ** -2 - ONE)
    return ZERO


def _r_fock(b, a, bp, ap):
    # the R of the first-order calculus
    if a == b == ap == bp:
        return Q.inverse()
    if a != b and a == ap and b == bp:
        return ONE
    if a < b and a == bp and b == ap:
        return Q.inverse() - Q
    return ZERO


def _polmat(m, n, delta_const, rmat, prefactor, name) -> Presentation:
    nm = m * n
    un = _cmat_gen_names(m, n)
    st = [s + "'" for s in un]
    # starred block in reversed order so star images of rules stay oriented
    gens = ([GeneratorInfo(nm_, degree=(1,)) for nm_ in un]
            + [GeneratorInfo(nm_, degree=(-1,)) for nm_ in reversed(st)])
    pos = {g.name: i for i, g in enumerate(gens)}
    idx = _mat_idx(m)
    rules = _cmat_rules(m, n)
    inv = {}
    for a in range(1, n + 1):
        for al in range(1, m + 1):
            i = idx(a, al)
            j = pos[un[i] + "'"]
            inv[i] = (ONE, (j,))
            inv[j] = (ONE, (i,))
    rows = range(1, n + 1)
    cols = range(1, m + 1)
    for b in rows:
        for be in cols:
            for a in rows:
                for al in cols:
                    lhs = (pos[un[idx(b, be)] + "'"], idx(a, al))
                    rhs = NCPoly()
                    for ap in rows:
                        for bp in rows:
                            rb = rmat(b, a, bp, ap)
                            if rb.is_zero():
                                continue
                            for alp in cols:
                                for bep in cols:
                                    rbe = rmat(be, al, bep, alp)
                                    if rbe.is_zero():
                                        continue
                                    rhs.add_term(
                                        (idx(ap, alp), pos[un[idx(bp, bep)] + "'"]),
                                        prefactor * rb * rbe)
                    if a == b and al == be:
                        rhs.add_term((), delta_const)
                    rules[lhs] = rhs
    _close_rules_under_star(rules, inv)
    return Presentation(name, gens, rules, involution=inv)


def polmat(m: int, n: int) -> Presentation:
    return _polmat(m, n, ONE - Q ** 2, _rhat, ONE, "polmat")


def polmat_alt(m: int, n: int) -> Presentation:
    return _polmat(m, n, ONE - Q ** 2, _r_cont, Q ** 2, "polmat_alt")


def pmn(m: int, n: int) -> Presentation:
    return _polmat(m, n, ONE, _rhat, ONE, "pmn")


def fun_mat(m: int, n: int) -> Presentation:
    base = polmat(m, n)
    nm = m * n
    gens = list(base.generators[:nm]) + [GeneratorInfo("f0", degree=(0,))] \
        + list(base.generators[nm:])
    f0 = nm
    remap = {i: (i if i < nm else i + 1) for i in range(2 * nm)}

    def rw(p: NCPoly) -> NCPoly:
        out = NCPoly()
        for w, c in p.terms.items():
            out.add_term(tuple(remap[i] for i in w), c)
        return out

    rules = {(remap[a], remap[b]): rw(rhs) for (a, b), rhs in base.rules.items()}
    for i in range(nm):
        rules[(f0, i)] = NCPoly.zero()            # f0 z = 0
        rules[(remap[nm + i], f0)] = NCPoly.zero()  # z' f0 = 0
    rules[(f0, f0)] = _w(f0)
    inv = {remap[i]: (s, tuple(remap[j] for j in w))
           for i, (s, w) in base.involution.items()}
    inv[f0] = (ONE, (f0,))
    return Presentation("fun_mat", gens, rules, involution=inv)


# ---------------------------------------------------------------------------
# first-order calculus over C[Mat]_q and the q-differential operators
# ---------------------------------------------------------------------------

def _zdz_coeff(m, n):
    """Coefficient of dz_{a'}^{al'} z_{b'}^{be'} in z_b^be dz_a^al."""
    rows = range(1, n + 1)
    cols = range(1, m + 1)
    idx = _mat_idx(m)
    table = {}
    for b in rows:
        for be in cols:
            for a in rows:
                for al in cols:
                    row = {}
                    for ap in rows:
                        for bp in rows:
                            r1 = _r_fock(b, a, bp, ap)
                            if r1.is_zero():
                                continue
                            for alp in cols:
                                for bep in cols:
                                    r2 = _r_fock(be, al, bep, alp)
                                    if r2.is_zero():
                                        continue
                                    key = (idx(ap, alp), idx(bp, bep))
                                    row[key] = row.get(key, ZERO) + r1 * r2
                    table[(idx(b, be), idx(a, al))] = row
    return table


def _dzdz_rules(m, n, dz_offset):
    """Exterior-square rules: solve the (dzdz) system for a PBW basis."""
    nm = m * n
    words = [(i, j) for i in range(nm) for j in range(nm)]
    wix = {w: k for k, w in enumerate(words)}
    table = _zdz_coeff(m, n)
    rows = []
    for (b, a) in words:
        row = [ZERO] * len(words)
        row[wix[(b, a)]] = row[wix[(b, a)]] + ONE
        for (ap, bp), c in table[(b, a)].items():
            row[wix[(ap, bp)]] = row[wix[(ap, bp)]] + c
        rows.append(row)
    # row-reduce and express every non-increasing pair in increasing ones
    mat = [list(r) for r in rows]
    ncols = len(words)
    pivots = []
    r = 0
    # eliminate in column order that prefers non-basis words as pivots
    col_order = sorted(range(ncols), key=lambda k: (words[k][0] <= words[k][1], words[k]))
    for col in col_order:
        piv = next((i for i in range(r, len(mat)) if not mat[i][col].is_zero()), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        invc = mat[r][col].inverse()
        mat[r] = [x * invc for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append((r, col))
        r += 1
    rules = {}
    for rr, col in pivots:
        i, j = words[col]
        if i < j:
            raise CatalogError("exterior square basis clash for m=%d n=%d" % (m, n))
        rhs = NCPoly()
        for k in range(ncols):
            if k != col and not mat[rr][k].is_zero():
                wi, wj = words[k]
                rhs.add_term((dz_offset + wi, dz_offset + wj), -mat[rr][k])
        rules[(dz_offset + i, dz_offset + j)] = rhs
    return rules


def lambda_mat(m: int, n: int) -> Presentation:
    """First-order calculus, normal form with the dz letters leftmost."""
    nm = m * n
    zn = _cmat_gen_names(m, n)
    gens = ([GeneratorInfo("d" + s, parity=1, degree=(1, 1)) for s in zn]
            + [GeneratorInfo(s, degree=(1, 0)) for s in zn])
    rules = _cmat_rules(m, n, offset=nm)
    table = _zdz_coeff(m, n)
    for (b, a), row in table.items():
        rhs = NCPoly()
        for (ap, bp), c in row.items():
            rhs.add_term((ap, nm + bp), c)
        rules[(nm + b, a)] = rhs
    rules.update(_dzdz_rules(m, n, 0))
    dmap = {nm + i: _w(i) for i in range(nm)}
    dmap.update({i: NCPoly.zero() for i in range(nm)})
    return Presentation("lambda_mat", gens, rules, dmap=dmap)


def lambda_mat_r(m: int, n: int) -> Presentation:
    """Same calculus, normal form with the dz letters rightmost.

    The stored (zdz) relations express z.dz words; the reversed orientation
    is obtained by inverting that linear system exactly.
    """
    nm = m * n
    zn = _cmat_gen_names(m, n)
    gens = ([GeneratorInfo(s, degree=(1, 0)) for s in zn]
            + [GeneratorInfo("d" + s, parity=1, degree=(1, 1)) for s in zn])
    rules = _cmat_rules(m, n)
    table = _zdz_coeff(m, n)
    words = [(i, j) for i in range(nm) for j in range(nm)]
    wix = {w: k for k, w in enumerate(words)}
    # [z dz vector] = C [dz z vector]; invert C
    cmatx = [[ZERO] * len(words) for _ in words]
    for (b, a), row in table.items():
        for (ap, bp), c in row.items():
            cmatx[wix[(b, a)]][wix[(ap, bp)]] = c
    unit_rows = []
    for k in range(len(words)):
        e = [ZERO] * len(words)
        e[k] = ONE
        unit_rows.append(e)
    # solve_linear returns, per unit vector e_k, the x with C x = e_k,
    # i.e. the columns of C^{-1}; then dzz_k = sum_l (C^{-1})[k,l] zdz_l
    inv_cols = solve_linear(cmatx, unit_rows)
    for k, (ap, bp) in enumerate(words):
        rhs = NCPoly()
        for l, (b, a) in enumerate(words):
            c = inv_cols[l][k]
            if not c.is_zero():
                rhs.add_term((b, nm + a), c)
        rules[(nm + ap, bp)] = rhs
    rules.update(_dzdz_rules(m, n, nm))
    dmap = {i: _w(nm + i) for i in range(nm)}
    dmap.update({nm + i: NCPoly.zero() for i in range(nm)})
    return Presentation("lambda_mat_r", gens, rules, dmap=dmap)


def dmat(m: int, n: int) -> Presentation:
    """q-differential operators: zhat letters then the partials."""
    nm = m * n
    zn = _cmat_gen_names(m, n)
    gens = ([GeneratorInfo("zh[%s" % s[2:], degree=(1,)) for s in zn]
            + [GeneratorInfo("d[%s" % s[2:], degree=(-1,)) for s in zn])
    idx = _mat_idx(m)
    rules = _cmat_rules(m, n)              # zhat block
    # partials block: the opposite-style relations
    pairs = [(a, al) for a in range(1, n + 1) for al in range(1, m + 1)]
    for (a, al) in pairs:
        for (b, be) in pairs:
            if idx(a, al) >= idx(b, be):
                continue
            x = nm + idx(a, al)
            y = nm + idx(b, be)
            if (a == b and al < be) or (a < b and al == be):
                rules[(y, x)] = _w(x, y).scale(Q)
            elif a < b and al > be:
                rules[(y, x)] = _w(x, y)
            else:
                u = nm + idx(a, be)
                v = nm + idx(b, al)
                rules[(y, x)] = _w(x, y) + _w(u, v).scale(LAM)
    # cross relations d zh = sum R R zh d + delta
    rows = range(1, n + 1)
    cols = range(1, m + 1)
    for a in rows:
        for al in cols:
            for b in rows:
                for be in cols:
                    rhs = NCPoly()
                    for ap in rows:
                        for bp in rows:
                            r1 = _r_fock(b, ap, bp, a)
                            if r1.is_zero():
                                continue
                            for alp in cols:
                                for bep in cols:
                                    r2 = _r_fock(be, alp, bep, al)
                                    if r2.is_zero():
                                        continue
                                    rhs.add_term(
                                        (idx(bp, bep), nm + idx(ap, alp)), r1 * r2)
                    if a == b and al == be:
                        rhs.add_term((), ONE)
                    rules[(nm + idx(a, al), idx(b, be))] = rhs
    return Presentation("dmat", gens, rules)


# ---------------------------------------------------------------------------
# SU(2,2) lecture algebras
# ---------------------------------------------------------------------------

_MAT2_HOLO = {
    ("beta", "alpha"): [("alpha beta", "1/q")],
    ("gamma", "alpha"): [("alpha gamma", "1/q")],
    ("delta", "beta"): [("beta delta", "1/q")],
    ("delta", "gamma"): [("gamma delta", "1/q")],
    ("gamma", "beta"): [("beta gamma", "1")],
    ("delta", "alpha"): [("alpha delta", "1"), ("beta gamma", "-lam")],
}


def _parse_coeff(tag: str) -> Scalar:
    if tag == "lam":
        return LAM
    if tag == "-lam":
        return -LAM
    neg = tag.startswith("-")
    if neg:
        tag = tag[1:]
    if tag == "1":
        s = ONE
    elif tag == "q":
        s = Q
    elif tag == "1/q":
        s = Q.inverse()
    elif tag == "q^2":
        s = Q ** 2
    else:
        raise ValueError(tag)
    return -s if neg else s


def pol_mat2() -> Presentation:
    un = ["alpha", "beta", "gamma", "delta"]
    st = [s + "'" for s in un]
    gens = ([GeneratorInfo(s, degree=(1,)) for s in un]
            + [GeneratorInfo(s, degree=(-1,)) for s in reversed(st)])
    pos = {g.name: i for i, g in enumerate(gens)}
    inv = {}
    for s in un:
        inv[pos[s]] = (ONE, (pos[s + "'"],))
        inv[pos[s + "'"]] = (ONE, (pos[s],))

    def word(names: str) -> tuple:
        return tuple(pos[t] for t in names.split())

    rules = {}
    for (a, b), terms in _MAT2_HOLO.items():
        rhs = NCPoly()
        for nm_, coeff in terms:
            rhs.add_term(word(nm_), _parse_coeff(coeff))
        rules[(pos[a], pos[b])] = rhs

    one = NCPoly.unit
    q2 = Q ** 2
    c1 = ONE - Q ** 2
    cross = {
        ("delta'", "alpha"): _w(*word("alpha delta'")),
        ("delta'", "beta"): _w(*word("beta delta'")).scale(Q),
        ("delta'", "gamma"): _w(*word("gamma delta'")).scale(Q),
        ("delta'", "delta"): _w(*word("delta delta'")).scale(q2) + one(c1),
        ("gamma'", "alpha"): (_w(*word("alpha gamma'")).scale(Q)
                              - _w(*word("beta delta'")).scale(Q.inverse() - Q)),
        ("gamma'", "beta"): _w(*word("beta gamma'")),
        ("gamma'", "gamma"): (_w(*word("gamma gamma'")).scale(q2)
                              - _w(*word("delta delta'")).scale(c1) + one(c1)),
        ("beta'", "alpha"): (_w(*word("alpha beta'")).scale(Q)
                             - _w(*word("gamma delta'")).scale(Q.inverse() - Q)),
        ("beta'", "beta"): (_w(*word("beta beta'")).scale(q2)
                            - _w(*word("delta delta'")).scale(c1) + one(c1)),
        ("alpha'", "alpha"): (_w(*word("alpha alpha'")).scale(q2)
                              - (_w(*word("beta beta'")) + _w(*word("gamma gamma'"))).scale(c1)
                              + _w(*word("delta delta'")).scale((Q.inverse() - Q) ** 2)
                              + one(c1)),
    }
    for (a, b), rhs in cross.items():
        rules[(pos[a], pos[b])] = rhs
    _close_rules_under_star(rules, inv)
    return Presentation("pol_mat2", gens, rules, involution=inv)


_MAT2_DZ = {
    # the coordinates-and-differentials table of the 2x2 calculus
    ("dalpha", "alpha"): [("alpha dalpha", "q^2")],
    ("dalpha", "beta"): [("beta dalpha", "q"), ("alpha dbeta", "-c1")],
    ("dalpha", "gamma"): [("gamma dalpha", "q"), ("alpha dgamma", "-c1")],
    ("dalpha", "delta"): [("delta dalpha", "1"), ("gamma dbeta", "-lam'"),
                          ("beta dgamma", "-lam'"), ("alpha ddelta", "lam'2")],
    ("dbeta", "alpha"): [("alpha dbeta", "q")],
    ("dbeta", "beta"): [("beta dbeta", "q^2")],
    ("dbeta", "gamma"): [("gamma dbeta", "1"), ("alpha ddelta", "-lam'")],
    ("dbeta", "delta"): [("delta dbeta", "q"), ("beta ddelta", "-c1")],
    ("dgamma", "alpha"): [("alpha dgamma", "q")],
    ("dgamma", "gamma"): [("gamma dgamma", "q^2")],
    ("dgamma", "beta"): [("beta dgamma", "1"), ("alpha ddelta", "-lam'")],
    ("dgamma", "delta"): [("delta dgamma", "q"), ("gamma ddelta", "-c1")],
    ("ddelta", "alpha"): [("alpha ddelta", "1")],
    ("ddelta", "gamma"): [("gamma ddelta", "q")],
    ("ddelta", "beta"): [("beta ddelta", "q")],
    ("ddelta", "delta"): [("delta ddelta", "q^2")],
}


def omega_mat2() -> Presentation:
    un = ["alpha", "beta", "gamma", "delta"]
    dn = ["d" + s for s in un]
    gens = ([GeneratorInfo(s, degree=(1, 0)) for s in un]
            + [GeneratorInfo(s, parity=1, degree=(1, 1)) for s in dn])
    pos = {g.name: i for i, g in enumerate(gens)}

    def word(names: str) -> tuple:
        return tuple(pos[t] for t in names.split())

    def coeff(tag: str) -> Scalar:
        c1 = ONE - Q ** 2
        lamp = Q.inverse() - Q
        table = {"q^2": Q ** 2, "q": Q, "1": ONE, "-c1": -c1,
                 "-lam'": -lamp, "lam'": lamp, "lam'2": lamp * lamp}
        return table[tag]

    rules = {}
    for (a, b), terms in _MAT2_HOLO.items():
        rhs = NCPoly()
        for nm_, c in terms:
            rhs.add_term(word(nm_), _parse_coeff(c))
        rules[(pos[a], pos[b])] = rhs
    for (a, b), terms in _MAT2_DZ.items():
        rhs = NCPoly()
        for nm_, c in terms:
            rhs.add_term(word(nm_), coeff(c))
        rules[(pos[a], pos[b])] = rhs
    dmap = {pos[s]: _w(pos["d" + s]) for s in un}
    dmap.update({pos["d" + s]: NCPoly.zero() for s in un})
    return Presentation("omega_mat2", gens, rules, dmap=dmap)


# ---------------------------------------------------------------------------
# quasi-commuting planes with inverse letters
# ---------------------------------------------------------------------------

def quasi_plane(name, letters, cexp, invertible=()) -> Presentation:
    """x_i x_j = q^{cexp[i][j]} x_j x_i with optional inverse letters.

    `letters` are base generator names; `cexp` is the antisymmetric integer
    exponent matrix; `invertible` lists base indices that get an inverse
    letter placed right after them in the normal order.
    """
    gens = []
    slot = {}          # (base index, sign) -> position
    for i, nm_ in enumerate(letters):
        slot[(i, 1)] = len(gens)
        gens.append(GeneratorInfo(nm_, degree=(1,)))
        if i in invertible:
            slot[(i, -1)] = len(gens)
            gens.append(GeneratorInfo(nm_ + "^-1", degree=(-1,)))
    rules = {}
    keys = sorted(slot)
    for ki in keys:
        for kj in keys:
            pi, pj = slot[ki], slot[kj]
            if ki[0] == kj[0]:
                if ki[1] != kj[1]:
                    rules[(pi, pj)] = NCPoly.unit()
                continue
            if pi <= pj:
                continue
            e = ki[1] * kj[1] * cexp[ki[0]][kj[0]]
            rules[(pi, pj)] = _w(pj, pi).scale(Q ** e)
    return Presentation(name, gens, rules)


def qplane4() -> Presentation:
    c = [[0, 1, 1, 1], [-1, 0, 1, 1], [-1, -1, 0, 1], [-1, -1, -1, 0]]
    return quasi_plane("qplane4", ["u1", "u2", "u3", "u4"], c, invertible=(2, 3))


def zeta_plane() -> Presentation:
    c = [[0, 1], [-1, 0]]
    return quasi_plane("zeta_plane", ["zeta1", "zeta2"], c, invertible=(0, 1))


# ---------------------------------------------------------------------------
# C[Mat_{2,4}]_q with the localization letters of the Penrose construction
# ---------------------------------------------------------------------------

def mat24() -> Presentation:
    tn = ["t[%d,%d]" % (i, j) for i in (1, 2) for j in (1, 2, 3, 4)]
    order = ["t^-1",
             "t[1,1]", "t[1,2]", "t[1,3]", "t[1,4]", "t[1,4]^-1",
             "t[2,1]", "t[2,2]", "t[2,3]", "t[2,3]^-1", "t[2,4]"]
    degree = {"t^-1": -2, "t[1,4]^-1": -1, "t[2,3]^-1": -1}
    gens = [GeneratorInfo(nm_, degree=(degree.get(nm_, 1),)) for nm_ in order]
    pos = {g.name: i for i, g in enumerate(gens)}

    def p(i, j):
        return pos["t[%d,%d]" % (i, j)]

    T, U, V = pos["t^-1"], pos["t[1,4]^-1"], pos["t[2,3]^-1"]

    # base relations, via the row/column case analysis (rows 1..2, cols 1..4)
    rules = {}
    cells = [(i, j) for i in (1, 2) for j in (1, 2, 3, 4)]
    rank = {c: k for k, c in enumerate(cells)}   # row-major order of cells
    for x in cells:
        for y in cells:
            if rank[x] >= rank[y]:
                continue
            i, j = x
            k, l = y
            if (i == k and j < l) or (j == l and i < k):
                rules[(p(k, l), p(i, j))] = _w(p(i, j), p(k, l)).scale(Q.inverse())
            elif i < k and j > l:
                rules[(p(k, l), p(i, j))] = _w(p(i, j), p(k, l))
            else:  # i < k, j < l
                rules[(p(k, l), p(i, j))] = (_w(p(i, j), p(k, l))
                                             - _w(p(i, l), p(k, j)).scale(LAM))

    # cancellations
    rules[(p(1, 4), U)] = NCPoly.unit()
    rules[(U, p(1, 4))] = NCPoly.unit()
    rules[(p(2, 3), V)] = NCPoly.unit()
    rules[(V, p(2, 3))] = NCPoly.unit()

    def qc(a, b, e):
        """oriented quasi-commutation a b -> q^e b a (a must sit later)."""
        rules[(a, b)] = _w(b, a).scale(Q ** e)

    # U = t14^{-1}: t14 q-commutes with its row and column, commutes otherwise
    qc(U, p(1, 1), 1)
    qc(U, p(1, 2), 1)
    qc(U, p(1, 3), 1)
    qc(p(2, 1), U, 0)
    qc(p(2, 2), U, 0)
    qc(p(2, 3), U, 0)
    qc(p(2, 4), U, 1)
    # V = t23^{-1}
    qc(V, p(1, 3), 1)
    qc(V, p(1, 4), 0)
    qc(V, p(2, 1), 1)
    qc(V, p(2, 2), 1)
    qc(p(2, 4), V, 1)
    qc(V, U, 0)
    # the two diagonal partners of t23 need the quadratic correction:
    # V t1j = t1j V + (q-1/q) q^2 t13 t2j V V   for j = 1, 2
    for j in (1, 2):
        rules[(V, p(1, j))] = (_w(p(1, j), V)
                               + _w(p(1, 3), p(2, j), V, V).scale(LAM * Q ** 2))
    # T = t^{-1}: t is central in columns 3,4 and q^{-1}-commutes with 1,2
    for i in (1, 2):
        for j in (1, 2):
            qc(p(i, j), T, -1)
        for j in (3, 4):
            qc(p(i, j), T, 0)
    qc(U, T, 0)
    qc(V, T, 0)
    return Presentation("mat24", gens, rules)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_REGISTRY = {
    "pol_disc": lambda **kw: _pol_disc(),
    "fun_disc": lambda **kw: _fun_disc(),
    "omega_disc": lambda **kw: _omega_disc(),
    "clifford_disc": lambda **kw: _clifford_disc(),
    "weyl_disc": lambda **kw: _weyl_disc(),
    "cmat": lambda m=2, n=2, **kw: cmat(m, n),
    "polmat": lambda m=2, n=2, **kw: polmat(m, n),
    "polmat_alt": lambda m=2, n=2, **kw: polmat_alt(m, n),
    "pmn": lambda m=2, n=2, **kw: pmn(m, n),
    "fun_mat": lambda m=2, n=2, **kw: fun_mat(m, n),
    "lambda_mat": lambda m=2, n=2, **kw: lambda_mat(m, n),
    "lambda_mat_r": lambda m=2, n=2, **kw: lambda_mat_r(m, n),
    "dmat": lambda m=2, n=2, **kw: dmat(m, n),
    "pol_mat2": lambda **kw: pol_mat2(),
    "omega_mat2": lambda **kw: omega_mat2(),
    "qplane4": lambda **kw: qplane4(),
    "mat24": lambda **kw: mat24(),
    "zeta_plane": lambda **kw: zeta_plane(),
}

CATALOG_NAMES = tuple(sorted(_REGISTRY))

_cache: dict = {}


def catalog(name: str, **params) -> Presentation:
    if name not in _REGISTRY:
        raise CatalogError("no catalog algebra named %r" % (name,))
    key = (name, tuple(sorted(params.items())))
    if key not in _cache:
        _cache[key] = _REGISTRY[name](**params)
    return _cache[key]
