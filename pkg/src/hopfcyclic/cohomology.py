"""Hochschild and cyclic cohomology of the cyclic module of a Hopf algebra.

The differentials follow the standard mixed-complex conventions:
b is the alternating sum of faces, lambda_n = (-1)^n tau_n, the norm is
N = sum of powers of lambda, the extra degeneracy is s = sigma_n tau_{n+1},
and B = N s (1 - lambda).  The defining identities b^2 = 0, B^2 = 0 and
bB + Bb = 0 are enforced by the test suite, so a sign slip cannot pass
silently.

Cyclic cohomology is computed two ways: from the lambda-invariant
subcomplex (valid in characteristic 0) and from the total complex of the
first-quadrant (b, B)-bicomplex.  For a truncation at max degree N the
total complex is exact below the boundary; the top two degrees are still
flagged boundary-unreliable and excluded from cross-method assertions.
"""

from __future__ import annotations

from .hopf import check_involution, vec_add, vec_scale
from .linalg import SparseMatrix
from .reports import CheckReport


class NotCyclicError(Exception):
    """Raised when the twisted antipode is not an involution, so the
    cyclic operator machinery would be unsound."""


# ---------------------------------------------------------------------------
# elementwise differentials


def hochschild_b(module, n, t):
    """b = sum_i (-1)^i face_i, from degree n-1 to degree n."""
    out = {}
    sign = 1
    for i in range(n + 1):
        out = vec_add(out, vec_scale(sign, module.face(i, n, t)))
        sign = -sign
    return out


def signed_cyclic(module, n, t):
    """lambda_n = (-1)^n tau_n."""
    out = module.cyclic(n, t)
    return out if n % 2 == 0 else vec_scale(-1, out)


def norm_operator(module, n, t):
    """N = sum of the n+1 powers of lambda_n."""
    out = dict(t)
    acc = t
    for _ in range(n):
        acc = signed_cyclic(module, n, acc)
        out = vec_add(out, acc)
    return out


def extra_degeneracy(module, n, t):
    """s = sigma_n tau_{n+1}, from degree n+1 to degree n."""
    return module.degeneracy(n, n, module.cyclic(n + 1, t))


def B_operator(module, n, t):
    """B = N s (1 - lambda), from degree n+1 to degree n."""
    t1 = vec_add(t, vec_scale(-1, signed_cyclic(module, n + 1, t)))
    return norm_operator(module, n, extra_degeneracy(module, n, t1))


# ---------------------------------------------------------------------------
# matrices (finite-dimensional modules)


def b_matrix(module, n):
    return module.operator_matrix(lambda t: hochschild_b(module, n, t), n - 1, n)


def B_matrix(module, n):
    return module.operator_matrix(lambda t: B_operator(module, n, t), n + 1, n)


def one_minus_lambda_matrix(module, n):
    lam = module.operator_matrix(
        lambda t: signed_cyclic(module, n, t), n, n)
    ident = SparseMatrix.identity(module.space_dim(n), module.field.one())
    return ident - lam


def require_involution(hopf, delta):
    ok, witness = check_involution(hopf, delta)
    if not ok:
        raise NotCyclicError(
            f"twisted antipode is not an involution on {hopf.name} "
            f"(witness basis element {witness!r}); refusing the cyclic "
            f"operator machinery")


# ---------------------------------------------------------------------------
# dimension computations


class ComplexReport:
    """Per-degree dimension table for one algebra/character pair."""

    def __init__(self, name, character, max_degree, method):
        self.name = name
        self.character = character
        self.max_degree = max_degree
        self.method = method
        self.rows = []  # dicts: degree, dim, rank_b, hh, hc_lambda, hc_bB, flag

    def add_row(self, **kw):
        self.rows.append(kw)

    def hc_column(self, method):
        key = "hc_lambda" if method == "lambda" else "hc_bB"
        return [row.get(key) for row in self.rows]

    def render(self):
        lines = [
            "report: cohomology",
            f"algebra: {self.name}",
            f"character: {self.character}",
            f"max-degree: {self.max_degree}",
            f"method: {self.method}",
            "columns: degree dim rank_b HH HC(lambda) HC(bB) flag",
        ]
        for row in self.rows:
            def fmt(key):
                v = row.get(key)
                return "-" if v is None else str(v)
            lines.append(
                f"degree {row['degree']}: dim={fmt('dim')} "
                f"rank_b={fmt('rank_b')} HH={fmt('hh')} "
                f"HC_lambda={fmt('hc_lambda')} HC_bB={fmt('hc_bB')}"
                f"{' flag=boundary-unreliable' if row.get('flag') else ''}")
        stab = self.stabilization()
        if stab is not None:
            lines.append(f"stabilization: {stab}")
        return "\n".join(lines)

    def stabilization(self):
        """Compare HC^n with HC^(n+2) where both are reliable; observational
        only (the periodicity map itself is not implemented)."""
        dims = [row.get("hc_lambda") if row.get("hc_lambda") is not None
                else row.get("hc_bB") for row in self.rows]
        pairs = []
        for n in range(len(dims) - 2):
            if dims[n] is None or dims[n + 2] is None:
                continue
            pairs.append(f"HC^{n}{'=' if dims[n] == dims[n + 2] else '!='}HC^{n + 2}")
        return " ".join(pairs) if pairs else None


def hochschild_dimensions(module, N_max):
    """HH^n = ker(b: C^n -> C^n+1) / im(b: C^n-1 -> C^n), n <= N_max."""
    ranks = [b_matrix(module, n).rank() for n in range(1, N_max + 2)]
    dims = []
    for n in range(N_max + 1):
        dim_cn = module.space_dim(n)
        rank_out = ranks[n]           # b: C^n -> C^(n+1)
        rank_in = ranks[n - 1] if n >= 1 else 0
        dims.append(dim_cn - rank_out - rank_in)
    return dims, ranks


def lambda_complex_dimensions(module, N_max):
    """HC^n from the lambda-invariant subcomplex with differential b."""
    kernel_dims = []
    image_ranks = []
    for n in range(N_max + 1):
        kernel = one_minus_lambda_matrix(module, n).kernel_basis()
        kernel_dims.append(len(kernel))
        cols = []
        for vec in kernel:
            t = {module.key_of_index(idx, n): c for idx, c in vec.items()}
            img = hochschild_b(module, n + 1, t)
            cols.append({module.key_index(k): v for k, v in img.items()})
        mat = SparseMatrix.from_columns(cols, module.space_dim(n + 1))
        image_ranks.append(mat.rank())
    dims = []
    for n in range(N_max + 1):
        rank_in = image_ranks[n - 1] if n >= 1 else 0
        dims.append(kernel_dims[n] - image_ranks[n] - rank_in)
    return dims


def bicomplex_dimensions(module, N_max):
    """HC^n from the total complex of the (b, B)-bicomplex truncated at
    column degree N_max.  Returns (dims, flags): dims[n] is None when the
    truncation cannot determine it; flags marks the top two degrees."""
    b_mats = {m: b_matrix(module, m) for m in range(1, N_max + 1)}
    B_mats = {m: B_matrix(module, m) for m in range(0, N_max)}
    space = [module.space_dim(m) for m in range(N_max + 1)]

    def components(n):
        return [n - 2 * p for p in range((n // 2) + 1)]

    def total_dim(n):
        return sum(space[m] for m in components(n))

    def total_matrix(n):
        """D = b + B from T^n to T^(n+1)."""
        src = components(n)
        tgt = components(n + 1)
        col_off = {}
        off = 0
        for m in src:
            col_off[m] = off
            off += space[m]
        row_off = {}
        off = 0
        for m in tgt:
            row_off[m] = off
            off += space[m]
        entries = {}
        for m in src:
            up = b_mats.get(m + 1)
            if up is not None and (m + 1) in row_off:
                for (r, c), v in up.entries.items():
                    entries[(row_off[m + 1] + r, col_off[m] + c)] = v
            if m >= 1 and (m - 1) in row_off:
                down = B_mats[m - 1]
                for (r, c), v in down.entries.items():
                    key = (row_off[m - 1] + r, col_off[m] + c)
                    s = entries.get(key, 0) + v
                    if s:
                        entries[key] = s
                    else:
                        entries.pop(key, None)
        nrows = sum(space[m] for m in tgt)
        ncols = sum(space[m] for m in src)
        return SparseMatrix(nrows, ncols, entries)

    ranks = {}
    for n in range(N_max):
        ranks[n] = total_matrix(n).rank()
    dims = []
    flags = []
    for n in range(N_max + 1):
        flagged = n >= N_max - 1
        if n < N_max:
            rank_in = ranks[n - 1] if n >= 1 else 0
            dims.append(total_dim(n) - ranks[n] - rank_in)
        else:
            dims.append(None)
        flags.append(flagged)
    return dims, flags


def cohomology_report(hopf, delta, N_max, method="both", module=None):
    """Full dimension table.  method: 'lambda', 'bB' or 'both'."""
    from .cyclic_ops import HopfCyclicModule
    require_involution(hopf, delta)
    module = module or HopfCyclicModule(hopf, delta)
    hh, b_ranks = hochschild_dimensions(module, N_max)
    hc_lambda = lambda_complex_dimensions(module, N_max) \
        if method in ("lambda", "both") else [None] * (N_max + 1)
    if method in ("bB", "both"):
        hc_bB, flags = bicomplex_dimensions(module, N_max)
    else:
        hc_bB, flags = [None] * (N_max + 1), [False] * (N_max + 1)
    report = ComplexReport(hopf.name, delta.name, N_max, method)
    for n in range(N_max + 1):
        report.add_row(degree=n, dim=module.space_dim(n),
                       rank_b=(b_ranks[n - 1] if n >= 1 else 0),
                       hh=hh[n], hc_lambda=hc_lambda[n], hc_bB=hc_bB[n],
                       flag=flags[n])
    return report


def methods_agree(report):
    """True when the two HC columns coincide on all unflagged degrees."""
    for row in report.rows:
        if row.get("flag"):
            continue
        a, b = row.get("hc_lambda"), row.get("hc_bB")
        if a is not None and b is not None and a != b:
            return False
    return True


def mixed_complex_report(module, N_max, samples=None, title="mixed-complex"):
    """b^2 = 0, B^2 = 0 and bB + Bb = 0 on all basis tensors, degrees <= N_max.

    Works elementwise, so it runs on symbolic modules when ``samples`` (a map
    degree -> list of tensors) is supplied.
    """
    def sample(n):
        return samples[n] if samples is not None else module.samples(n)

    report = CheckReport(title, meta={"max-degree": N_max})
    for n in range(N_max + 1):
        ok, witness = True, None
        for t in sample(n):
            bb = hochschild_b(module, n + 2, hochschild_b(module, n + 1, t))
            if bb:
                ok, witness = False, ("b.b", sorted(t))
                break
        report.add(f"b2 n={n}", ok, witness)
    for n in range(N_max - 1):
        ok, witness = True, None
        for t in sample(n + 2):
            BB = B_operator(module, n, B_operator(module, n + 1, t))
            if BB:
                ok, witness = False, ("B.B", sorted(t))
                break
        report.add(f"B2 n={n}", ok, witness)
    for n in range(N_max):
        ok, witness = True, None
        for t in sample(n):
            anti = vec_add(
                hochschild_b(module, n, B_operator(module, n - 1, t))
                if n >= 1 else {},
                B_operator(module, n, hochschild_b(module, n + 1, t)))
            if anti:
                ok, witness = False, ("bB+Bb", sorted(t))
                break
        report.add(f"bB+Bb n={n}", ok, witness)
    return report
