"""Line-oriented text formats for error sets, codes, amplitudes and reports.

Error-set file::

    field p=<int> m=<int> [poly=<comma coeffs>]
    n <int>
    err k=<int> a=<vector> b=<vector>

Code file: the same two header lines followed by ``C <vector>`` and
``C1 <vector>`` generator lines.  Blank lines and ``#`` comments are ignored.
A vector literal is a comma-separated list of element encodings; over GF(4)
the tokens ``x`` and ``x^2`` (or ``x2``) stand for 2 and 3.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Optional

from .errors import ConfigError, ConsistencyError, LengthMismatch, ParseError, ReflexError
from .galois import FieldSpec, LinearSubspace, Vector
from .graphs import LucSpec, vector_literal
from .pauli import ErrorOp, ErrorSet
from .reflexive import ReflexiveCode
from .verify import RULE_ORDER, Verdict

_GF4_ALIASES = {"x": 2, "x^2": 3, "x2": 3}


def parse_vector(text: str, field: FieldSpec, n: Optional[int] = None) -> Vector:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if field.d == 4 and tok in _GF4_ALIASES:
            out.append(_GF4_ALIASES[tok])
            continue
        try:
            val = int(tok)
        except ValueError:
            raise ValueError(f"bad vector entry {tok!r}") from None
        if not 0 <= val < field.d:
            raise ValueError(f"entry {val} is not an element of {field}")
        out.append(val)
    if n is not None and len(out) != n:
        raise LengthMismatch(f"vector {text!r} has length {len(out)}, expected {n}")
    return tuple(out)


def format_field(field: FieldSpec) -> str:
    line = f"field p={field.p} m={field.m}"
    if field.m > 1:
        line += " poly=" + ",".join(map(str, field.irreducible))
    return line


def _keyvals(tokens: list[str], line: int) -> dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ParseError(line, f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        out[key] = val
    return out


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _header(items: list[tuple[int, list[str]]]) -> tuple[FieldSpec, int, list[tuple[int, list[str]]]]:
    if not items or items[0][1][0] != "field":
        raise ParseError(items[0][0] if items else 1, "file must start with a 'field' line")
    no, toks = items[0]
    kv = _keyvals(toks[1:], no)
    try:
        p = int(kv["p"])
        m = int(kv.get("m", "1"))
        poly = tuple(int(c) for c in kv["poly"].split(",")) if "poly" in kv else None
        field = FieldSpec(p, m, poly)
    except KeyError:
        raise ParseError(no, "field line needs p=") from None
    except (ValueError, ConfigError) as exc:
        raise ParseError(no, str(exc)) from None
    if len(items) < 2 or items[1][1][0] != "n" or len(items[1][1]) != 2:
        raise ParseError(items[1][0] if len(items) > 1 else no, "second line must be 'n <int>'")
    no, toks = items[1]
    try:
        n = int(toks[1])
    except ValueError:
        raise ParseError(no, f"bad length {toks[1]!r}") from None
    if n < 1:
        raise ParseError(no, "n must be positive")
    return field, n, items[2:]


def parse_error_set(text: str) -> tuple[ErrorSet, list[str]]:
    """Parse an error-set file; returns the set and any warnings."""
    field, n, body = _header(list(_lines(text)))
    ops = []
    for no, toks in body:
        if toks[0] != "err":
            raise ParseError(no, f"unexpected directive {toks[0]!r}")
        kv = _keyvals(toks[1:], no)
        try:
            a = parse_vector(kv["a"], field, n)
            b = parse_vector(kv["b"], field, n)
            ops.append(ErrorOp(field, a, b, int(kv.get("k", "0"))))
        except KeyError as exc:
            raise ParseError(no, f"missing {exc.args[0]}=") from None
        except (ValueError, ReflexError) as exc:
            raise ParseError(no, str(exc)) from None
    warnings = []
    zero = field.zero(n)
    if not any(op.kappa == 0 and op.a == zero and op.b == zero for op in ops):
        warnings.append("identity missing from error set; inserted")
    return ErrorSet(field, n, ops), warnings


def format_error_set(E: ErrorSet) -> str:
    lines = [format_field(E.field), f"n {E.n}"]
    for op in E:
        lines.append(f"err k={op.kappa} a={vector_literal(op.a)} b={vector_literal(op.b)}")
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LucSpec:
    field, n, body = _header(list(_lines(text)))
    gens: dict[str, list[Vector]] = {"C": [], "C1": []}
    for no, toks in body:
        if toks[0] not in gens or len(toks) != 2:
            raise ParseError(no, "expected 'C <vector>' or 'C1 <vector>'")
        try:
            gens[toks[0]].append(parse_vector(toks[1], field, n))
        except (ValueError, ReflexError) as exc:
            raise ParseError(no, str(exc)) from None
    C = LinearSubspace.span(field, n, gens["C"])
    C1 = LinearSubspace.span(field, n, gens["C1"])
    if not C1.issubspace(C):
        raise ConsistencyError("C1 is not contained in C")
    return LucSpec(C, C1)


def format_code(spec: LucSpec, trace: Iterable[str] = ()) -> str:
    lines = [f"# {t}" for t in trace]
    lines += [format_field(spec.field), f"n {spec.n}"]
    lines += [f"C {vector_literal(v)}" for v in spec.C.basis]
    lines += [f"C1 {vector_literal(v)}" for v in spec.C1.basis]
    return "\n".join(lines) + "\n"


def check_same_space(spec: LucSpec, E: ErrorSet) -> None:
    if spec.field != E.field or spec.n != E.n:
        raise ConsistencyError(f"code over {spec.field}^{spec.n} but errors over {E.field}^{E.n}")


def _num(x: float) -> str:
    return f"{x:.17g}"


def format_amplitudes(code: ReflexiveCode) -> str:
    lines = []
    for i, word in enumerate(code.codewords):
        label = vector_literal(code.labels[i]) if code.labels is not None else "-"
        lines.append(f"# codeword {i} label {label}")
        for idx, amp in enumerate(word):
            lines.append(f"{idx} {_num(amp.real)} {_num(amp.imag)}")
    for (a, b), lam in code.eigenvalues.items():
        lines.append(f"# eigenvalue a={vector_literal(a)} b={vector_literal(b)} {_num(lam.real)} {_num(lam.imag)}")
    return "\n".join(lines) + "\n"


def format_report(verdicts: Iterable[Verdict]) -> str:
    order = {r: i for i, r in enumerate(RULE_ORDER)}
    lines = []
    for v in sorted(verdicts, key=lambda v: order.get(v.rule, len(order))):
        line = f"RULE {v.rule} VERDICT {'pass' if v.correctable else 'fail'}"
        if v.witnesses:
            line += f" WITNESS {v.witnesses[0].format()}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def format_pairs(pairs: Iterable[tuple[Vector, Vector]]) -> str:
    return "".join(f"gen a={vector_literal(x)} b={vector_literal(y)}\n" for x, y in pairs)
