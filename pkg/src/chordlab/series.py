"""Exact symbolic series: the two integral-like operators, the tree-like
equation solver, diagram-sum generating functions, and the differential and
functional identity checks.

Coefficients live in Q[f0, f1, ..., phi1, phi2, ...] with phi0 identified
with 1. Everything is exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from .diagram import ChordDiagram
from .structure import terminal_profile, valency

# monomial: sorted tuple of (kind, index, exponent), kind "f" or "p"
Mono = tuple[tuple[str, int, int], ...]

_ONE: Mono = ()


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    d: dict[tuple[str, int], int] = {}
    for k, i, e in a:
        d[(k, i)] = e
    for k, i, e in b:
        d[(k, i)] = d.get((k, i), 0) + e
    return tuple(sorted((k, i, e) for (k, i), e in d.items()))


def _mono_str(m: Mono) -> str:
    parts = []
    for k, i, e in m:
        name = ("f%d" if k == "f" else "phi%d") % i
        parts.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(parts)


class WeightPoly:
    """Polynomial in the f and phi indeterminates over exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        cleaned = {}
        if terms:
            for m, c in terms.items():
                if c:
                    cleaned[m] = c if isinstance(c, Fraction) else Fraction(c)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("WeightPoly is immutable")

    @classmethod
    def zero(cls) -> "WeightPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "WeightPoly":
        return cls({_ONE: Fraction(c)})

    @classmethod
    def one(cls) -> "WeightPoly":
        return cls.const(1)

    @classmethod
    def f(cls, i: int) -> "WeightPoly":
        if i < 0:
            raise ValueError("f index must be >= 0")
        return cls({(("f", i, 1),): Fraction(1)})

    @classmethod
    def phi(cls, k: int) -> "WeightPoly":
        if k < 0:
            raise ValueError("phi index must be >= 0")
        if k == 0:
            return cls.one()  # phi0 is the constant 1
        return cls({(("p", k, 1),): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeightPoly.const(other)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "WeightPoly":
        if isinstance(other, (int, Fraction)):
            other = WeightPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return WeightPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "WeightPoly":
        return WeightPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "WeightPoly":
        if isinstance(other, (int, Fraction)):
            other = WeightPoly.const(other)
        return self + (-other)

    def __mul__(self, other) -> "WeightPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return WeightPoly.zero()
            return WeightPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, WeightPoly):
            return NotImplemented
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return WeightPoly(out)

    __rmul__ = __mul__

    def evaluate(
        self,
        f: Callable[[int], Fraction],
        phi: Callable[[int], Fraction],
    ) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for kind, i, e in m:
                base = Fraction(f(i) if kind == "f" else phi(i))
                v *= base**e
            total += v
        return total

    def subs_phi(self, phi: Callable[[int], Fraction]) -> "WeightPoly":
        """Evaluate the phi indeterminates, keeping f symbolic."""
        out: dict[Mono, Fraction] = {}
        for m, c in self.terms.items():
            rest = []
            for kind, i, e in m:
                if kind == "p":
                    c = c * Fraction(phi(i)) ** e
                else:
                    rest.append((kind, i, e))
            key = tuple(rest)
            out[key] = out.get(key, Fraction(0)) + c
        return WeightPoly(out)

    def canonical(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            ms = _mono_str(m)
            if not ms:
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                parts.append("%s*%s" % (c, ms))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return "WeightPoly(%s)" % self.canonical()


class YPoly:
    """Polynomial in y with WeightPoly coefficients; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[WeightPoly] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def zero(cls) -> "YPoly":
        return cls()

    @classmethod
    def basis(cls, n: int, coeff: WeightPoly | None = None) -> "YPoly":
        c = WeightPoly.one() if coeff is None else coeff
        return cls([WeightPoly.zero()] * n + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> WeightPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return WeightPoly.zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, YPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "YPoly") -> "YPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "YPoly") -> "YPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly([self[i] - other[i] for i in range(n)])

    def __mul__(self, other) -> "YPoly":
        if isinstance(other, (int, Fraction, WeightPoly)):
            return YPoly([c * other for c in self.coeffs])
        if not isinstance(other, YPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return YPoly.zero()
        out = [WeightPoly.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return YPoly(out)

    __rmul__ = __mul__

    def subs_phi(self, phi: Callable[[int], Fraction]) -> "YPoly":
        return YPoly([c.subs_phi(phi) for c in self.coeffs])

    def evaluate(
        self,
        f: Callable[[int], Fraction],
        phi: Callable[[int], Fraction],
        y: Fraction,
    ) -> Fraction:
        total = Fraction(0)
        power = Fraction(1)
        for c in self.coeffs:
            total += c.evaluate(f, phi) * power
            power *= y
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "YPoly(0)"
        bits = [
            "(%s)*y^%d" % (c.canonical(), i)
            for i, c in enumerate(self.coeffs)
            if c
        ]
        return "YPoly(%s)" % " + ".join(bits)


OPERATOR_NAMES = ("binomial", "divided-power")


def operator_kind(name: str) -> str:
    if name in ("bin", "binomial"):
        return "binomial"
    if name in ("div", "divided-power", "pow", "power"):
        return "divided-power"
    raise ValueError("unknown operator: %s" % name)


def l_bin(p: YPoly, t_max: int | None = None) -> YPoly:
    """y^n -> n! sum_{i=1}^{n+1} f_{n+1-i} y^i / i!, extended linearly."""
    if t_max is not None and p.degree + 1 > t_max:
        raise ValueError("truncation exceeded: need f index %d" % (p.degree))
    out = YPoly.zero()
    for n, c in enumerate(p.coeffs):
        if not c:
            continue
        img = [WeightPoly.zero()] * (n + 2)
        for i in range(1, n + 2):
            scale = Fraction(factorial(n), factorial(i))
            img[i] = c * WeightPoly.f(n + 1 - i) * scale
        out = out + YPoly(img)
    return out


def l_div(p: YPoly, t_max: int | None = None) -> YPoly:
    """y^n -> sum_{i=1}^{n+1} f_{n+1-i} y^i, extended linearly."""
    if t_max is not None and p.degree + 1 > t_max:
        raise ValueError("truncation exceeded: need f index %d" % (p.degree))
    out = YPoly.zero()
    for n, c in enumerate(p.coeffs):
        if not c:
            continue
        img = [WeightPoly.zero()] * (n + 2)
        for i in range(1, n + 2):
            img[i] = c * WeightPoly.f(n + 1 - i)
        out = out + YPoly(img)
    return out


def apply_operator(name: str, p: YPoly, t_max: int | None = None) -> YPoly:
    return (l_bin if operator_kind(name) == "binomial" else l_div)(p, t_max)


# tensor square of the y-polynomial space: (y-power, y-power) -> WeightPoly
Tensor = dict[tuple[int, int], WeightPoly]


def _tensor_add(t: Tensor, key: tuple[int, int], val: WeightPoly) -> None:
    cur = t.get(key)
    t[key] = val if cur is None else cur + val


def _tensor_clean(t: Tensor) -> Tensor:
    return {k: v for k, v in t.items() if v}


def _coproduct_coeff(coalgebra: str, n: int, k: int) -> Fraction:
    if coalgebra == "binomial":
        return Fraction(comb(n, k))
    if coalgebra == "divided-power":
        return Fraction(1)
    raise ValueError("unknown coalgebra: %s" % coalgebra)


def check_cocycle(
    coalgebra: str,
    n_max: int,
    operator: str | None = None,
    report: list | None = None,
) -> bool:
    """Verify Delta(L(y^n)) = (id (x) L)(Delta(y^n)) + L(y^n) (x) 1 on the
    basis y^n for n <= n_max.

    The coproduct is split-by-exponent with binomial or all-ones section
    coefficients; the operator defaults to the coalgebra's own.
    """
    coalgebra = operator_kind(coalgebra)
    op = coalgebra if operator is None else operator_kind(operator)
    for n in range(n_max + 1):
        img = apply_operator(op, YPoly.basis(n))
        lhs: Tensor = {}
        for i, c in enumerate(img.coeffs):
            if not c:
                continue
            for k in range(i + 1):
                w = _coproduct_coeff(coalgebra, i, k)
                _tensor_add(lhs, (k, i - k), c * w)
        rhs: Tensor = {}
        for k in range(n + 1):
            w = _coproduct_coeff(coalgebra, n, k)
            part = apply_operator(op, YPoly.basis(n - k))
            for j, cj in enumerate(part.coeffs):
                if cj:
                    _tensor_add(rhs, (k, j), cj * w)
        for i, c in enumerate(img.coeffs):
            if c:
                _tensor_add(rhs, (i, 0), c)
        lhs, rhs = _tensor_clean(lhs), _tensor_clean(rhs)
        if lhs != rhs:
            if report is not None:
                keys = sorted(set(lhs) | set(rhs))
                bad = next(k for k in keys if lhs.get(k) != rhs.get(k))
                report.append(
                    {
                        "n": n,
                        "key": bad,
                        "lhs": lhs.get(bad, WeightPoly.zero()).canonical(),
                        "rhs": rhs.get(bad, WeightPoly.zero()).canonical(),
                    }
                )
            return False
    return True


def _xseries_mul(a: list[YPoly], b: list[YPoly], n_max: int) -> list[YPoly]:
    out = [YPoly.zero() for _ in range(n_max + 1)]
    for i, ai in enumerate(a):
        if not ai or i > n_max:
            continue
        for j, bj in enumerate(b):
            if i + j > n_max:
                break
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def solve_tree_like(operator: str, n_max: int) -> list[YPoly]:
    """Order-N solution of G = x L(phi(G)) with symbolic f and phi.

    Index n holds [x^n]G; index 0 is zero. phi(z) = 1 + phi1 z + phi2 z^2 + ...
    """
    op = operator_kind(operator)
    h = [YPoly.zero() for _ in range(n_max + 1)]
    if n_max >= 1:
        h[1] = apply_operator(op, YPoly.basis(0))
    # powers[k] = G^k truncated, rebuilt as h grows
    for n in range(1, n_max):
        power = [YPoly.zero()] * (n + 1)
        power[0] = YPoly.basis(0)
        rhs = YPoly.zero()
        for k in range(1, n + 1):
            power = _xseries_mul(power, h[: n + 1], n)
            if power[n]:
                rhs = rhs + WeightPoly.phi(k) * power[n]
        h[n + 1] = apply_operator(op, rhs)
    return h


def f_monomial(c: ChordDiagram) -> WeightPoly:
    """f_C: f0 to the non-terminal count times the terminal-gap factors."""
    if not c.is_connected():
        raise ValueError("weight requires a connected diagram")
    t = terminal_profile(c)
    mono: dict[tuple[str, int], int] = {}
    if c.n - len(t):
        mono[("f", 0)] = c.n - len(t)
    for a, b in zip(t, t[1:]):
        key = ("f", b - a)
        mono[key] = mono.get(key, 0) + 1
    m: Mono = tuple(sorted((k, i, e) for (k, i), e in mono.items()))
    return WeightPoly({m: Fraction(1)})


def phi_monomial(c: ChordDiagram) -> WeightPoly:
    """phi_C: product of phi_{val(chord)} over all chords (phi0 = 1)."""
    if not c.is_connected():
        raise ValueError("weight requires a connected diagram")
    mono: dict[tuple[str, int], int] = {}
    for i in range(1, c.n + 1):
        v = valency(c, i)
        if v:
            mono[("p", v)] = mono.get(("p", v), 0) + 1
    m: Mono = tuple(sorted((k, i, e) for (k, i), e in mono.items()))
    return WeightPoly({m: Fraction(1)})


def diagram_series(operator: str, n_max: int) -> list[YPoly]:
    """The diagram-sum solution: over connected diagrams for the binomial
    operator, connected top-cycle-free for divided-power.

    Each diagram C contributes f_C phi_C x^{|C|} L(y^{t1-1}), divided by
    (t1-1)! in the binomial case.
    """
    from .enumeration import connected_diagrams
    from .patterns import contains_any_top_cycle

    op = operator_kind(operator)
    out = [YPoly.zero() for _ in range(n_max + 1)]
    for n in range(1, n_max + 1):
        acc = YPoly.zero()
        for d in connected_diagrams(n):
            if op == "divided-power" and contains_any_top_cycle(d):
                continue
            k = terminal_profile(d)[0]
            ypart = apply_operator(op, YPoly.basis(k - 1))
            if op == "binomial":
                ypart = ypart * Fraction(1, factorial(k - 1))
            acc = acc + ypart * (f_monomial(d) * phi_monomial(d))
        out[n] = acc
    return out


def g_table(series: list[YPoly], phi: Callable[[int], Fraction] | None = None):
    """g_{i,n} = i! [y^i][x^n] of the series, optionally with phi evaluated."""
    n_max = len(series) - 1
    g: dict[tuple[int, int], WeightPoly] = {}
    for n in range(1, n_max + 1):
        yp = series[n]
        if phi is not None:
            yp = yp.subs_phi(phi)
        for i in range(1, yp.degree + 1):
            g[(i, n)] = yp[i] * factorial(i)
    return g


def check_rge(
    n_max: int, operator: str = "binomial", report: list | None = None
) -> bool:
    """With phi = all ones and f symbolic, test the coefficient form of the
    flow equation: g_{i,n} = sum_m (2(n-m)-1) g_{1,m} g_{i-1,n-m}, 2 <= i <= n.
    """
    series = solve_tree_like(operator, n_max)
    g = g_table(series, phi=lambda k: Fraction(1))
    zero = WeightPoly.zero()
    for n in range(2, n_max + 1):
        for i in range(2, n + 1):
            rhs = WeightPoly.zero()
            for m in range(1, n):
                a = g.get((1, m))
                b = g.get((i - 1, n - m))
                if a and b:
                    rhs = rhs + (2 * (n - m) - 1) * a * b
            lhs = g.get((i, n), zero)
            if lhs != rhs:
                if report is not None:
                    report.append(
                        {
                            "i": i,
                            "n": n,
                            "lhs": lhs.canonical(),
                            "rhs": rhs.canonical(),
                        }
                    )
                return False
    return True


def root_share_sum(n: int, i: int) -> WeightPoly:
    """Sum of f_{t1(C)-i} f_C over connected C of size n with t1 >= i."""
    from .enumeration import connected_diagrams

    if n < 1:
        return WeightPoly.zero()
    total = WeightPoly.zero()
    for d in connected_diagrams(n):
        k = terminal_profile(d)[0]
        if k >= i:
            total = total + WeightPoly.f(k - i) * f_monomial(d)
    return total


def check_root_share_identity(n_max: int, report: list | None = None) -> bool:
    """Root-share convolution: A(n,i) = sum_m (2(n-m)-1) A(m,1) A(n-m,i-1)
    for 2 <= n <= n_max, 1 <= i <= n, symbolically in f."""
    cache: dict[tuple[int, int], WeightPoly] = {}

    def a(n: int, i: int) -> WeightPoly:
        if n < 1:
            return WeightPoly.zero()
        key = (n, i)
        if key not in cache:
            cache[key] = root_share_sum(n, i)
        return cache[key]

    for n in range(2, n_max + 1):
        for i in range(1, n + 1):
            rhs = WeightPoly.zero()
            for m in range(1, n - i + 2):
                term = a(m, 1) * a(n - m, i - 1)
                if term:
                    rhs = rhs + (2 * (n - m) - 1) * term
            if a(n, i) != rhs:
                if report is not None:
                    report.append(
                        {
                            "n": n,
                            "i": i,
                            "lhs": a(n, i).canonical(),
                            "rhs": rhs.canonical(),
                        }
                    )
                return False
    return True


def _int_series_mul(a: list, b: list, n_max: int) -> list:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a):
        if not ai or i > n_max:
            continue
        for j in range(min(len(b), n_max - i + 1)):
            out[i + j] += ai * b[j]
    return out


def forbidden_class_recurrence(a: list[int], b: list[int]) -> list[int]:
    """Right side of a_n = [x^n](1 + F(x G(x)^2)) given the class series
    G = 1 + sum a_n x^n and its connected counterpart F = sum b_n x^n."""
    n_max = len(a) - 1
    g = list(a)
    g[0] = 1
    out = [0] * (n_max + 1)
    out[0] = 1
    g2 = _int_series_mul(g, g, n_max)
    power = [1] + [0] * n_max  # (x G^2)^k accumulates a shift of k
    for k in range(1, n_max + 1):
        power = _int_series_mul(power, g2, n_max - k)
        if k >= len(b):
            break
        for n in range(k, n_max + 1):
            if n - k < len(power) and power[n - k]:
                out[n] += b[k] * power[n - k]
    return out


def egf_antiderivative_counts(n_max: int) -> list[int]:
    """n! [x^n] of the C with C' = 1/(1 - C), C(0) = 0; these are the
    all-diagram counts shifted by one: (2(n-1) - 1)!!."""
    c = [Fraction(0)] * (n_max + 1)
    for n in range(n_max):
        # [x^n] 1/(1 - C) via powers of the truncation built so far
        total = Fraction(1) if n == 0 else Fraction(0)
        cur = [Fraction(1)] + [Fraction(0)] * n
        for _ in range(1, n + 1):
            nxt = [Fraction(0)] * (n + 1)
            for i, ci in enumerate(cur):
                if ci:
                    for j in range(1, n + 1 - i):
                        nxt[i + j] += ci * c[j]
            cur = nxt
            total += cur[n]
        c[n + 1] = total / (n + 1)
    out = []
    for n in range(n_max + 1):
        v = c[n] * factorial(n)
        assert v.denominator == 1
        out.append(int(v))
    return out


def ogf_checks(n_max: int) -> dict:
    """Three ordinary/exponential generating-function checks against brute
    counts: the connected-count recurrence, the forbidden-class functional
    equation for every profile class, and the antiderivative EGF."""
    from .enumeration import census, class_census
    from .oracles import double_factorial

    conn = [0] + [census(n)["connected"] for n in range(1, n_max + 1)]
    stein_vals = [0] * (n_max + 1)
    if n_max >= 1:
        stein_vals[1] = 1
    for n in range(1, n_max):
        stein_vals[n + 1] = sum(
            (2 * k - 1) * stein_vals[k] * stein_vals[n + 1 - k]
            for k in range(1, n + 1)
        )
    stein_ok = conn == stein_vals

    per_class = {}
    tables = [class_census(n) for n in range(1, n_max + 1)]
    from .enumeration import PROFILE_CLASSES

    for cls in PROFILE_CLASSES:
        a = [1] + [tables[n - 1][cls]["all"] for n in range(1, n_max + 1)]
        b = [0] + [tables[n - 1][cls]["connected"] for n in range(1, n_max + 1)]
        recurred = forbidden_class_recurrence(a, b)
        # The root-component decomposition only respects forbidden patterns
        # whose intersection graphs are connected; nonnesting forbids a pure
        # nesting (two chords, no crossing), so the equation does not apply.
        applies = cls != "nonnesting"
        per_class[cls] = {
            "all": a,
            "connected": b,
            "recurrence": recurred,
            "applies": applies,
            "ok": recurred == a if applies else None,
        }

    egf = egf_antiderivative_counts(n_max)
    expected = [0] + [double_factorial(n - 1) for n in range(1, n_max + 1)]
    egf_ok = egf[1:] == expected[1:]

    return {
        "stein": {"ok": stein_ok, "enumerated": conn, "recurrence": stein_vals},
        "classes": per_class,
        "egf": {"ok": egf_ok, "values": egf, "expected": expected},
        "ok": stein_ok
        and egf_ok
        and all(v["ok"] for v in per_class.values() if v["applies"]),
    }


def covering_phi(s: int) -> Callable[[int], Fraction]:
    """Preset phi_k = C(k+s, k+1), the covering-number weights."""

    def phi(k: int) -> Fraction:
        return Fraction(comb(k + s, k + 1))

    return phi


def series_rows(operator: str, n_max: int, source: str = "solve") -> list[dict]:
    """JSON-ready coefficient rows for the CLI."""
    series = (
        solve_tree_like(operator, n_max)
        if source == "solve"
        else diagram_series(operator, n_max)
    )
    rows = []
    for n in range(1, n_max + 1):
        for i, c in enumerate(series[n].coeffs):
            if c:
                rows.append({"n": n, "y_power": i, "poly": c.canonical()})
    return rows
