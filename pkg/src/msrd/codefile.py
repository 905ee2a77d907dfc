"""Text (JSON) serialisation of linear sum-rank-metric codes.

Layout of a version-1 document::

    format_version      1
    q, p, e             base field F_q with q = p^e (canonical modulus over F_p)
    moduli              per block, F_q coefficients of the extension modulus,
                        constant term first, leading 1 included
    sizes               block sizes n_1, ..., n_t
    designed_distance   target minimum sum-rank distance
    generators          list of generators; each is a list of t blocks, each
                        block the n_i q-polynomial coefficients a_0..a_{n_i-1}
                        as integer encodings of F_{q^{n_i}} elements

Field elements are encoded as little-endian base-q digits of their
power-basis coordinates, each digit itself base-p packed.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import CodeFileError, MSRDError
from .fields import ExtFieldCtx, decode_int, encode_int, is_irreducible, make_field
from .linearized import QPoly
from .sumrank import CodeShape, LinearSumRankCode, SumRankVector

FORMAT_VERSION = 1


def code_to_dict(code: LinearSumRankCode) -> dict:
    shape = code.shape
    return {
        "format_version": FORMAT_VERSION,
        "q": shape.q,
        "p": shape.field.p,
        "e": shape.field.e,
        "moduli": [list(c.modulus) for c in shape.contexts],
        "sizes": list(shape.sizes),
        "designed_distance": code.designed_distance,
        "generators": [[[encode_int(a) for a in b.coeffs] for b in v.blocks] for v in code.basis],
    }


def dumps_code(code: LinearSumRankCode) -> str:
    """Deterministic text form: one generator per line."""
    doc = code_to_dict(code)
    gens = doc.pop("generators")
    lines = ["{"]
    for key, val in doc.items():
        lines.append(f"  {json.dumps(key)}: {json.dumps(val)},")
    if gens:
        lines.append('  "generators": [')
        lines.extend(f"    {json.dumps(g)}," for g in gens)
        lines[-1] = lines[-1].rstrip(",")
        lines.append("  ]")
    else:
        lines.append('  "generators": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def code_from_dict(doc: dict) -> LinearSumRankCode:
    try:
        if doc.get("format_version") != FORMAT_VERSION:
            raise CodeFileError(f"unsupported format_version {doc.get('format_version')!r}")
        q, p, e = int(doc["q"]), int(doc["p"]), int(doc["e"])
        if p**e != q:
            raise CodeFileError(f"q = {q} is not p^e = {p}^{e}")
        F = make_field(q)
        sizes = [int(n) for n in doc["sizes"]]
        moduli = doc["moduli"]
        if len(moduli) != len(sizes):
            raise CodeFileError("one modulus per block is required")
        ctxs = []
        for n, mod in zip(sizes, moduli):
            mod = tuple(int(c) for c in mod)
            ctx = ExtFieldCtx(F, n, mod)
            if not is_irreducible(F, mod):
                raise CodeFileError(f"modulus {list(mod)} is reducible over GF({q})")
            ctxs.append(ctx)
        shape = CodeShape(F, tuple(sizes), tuple(ctxs), strict=False)
        basis = []
        for g in doc["generators"]:
            if len(g) != shape.t:
                raise CodeFileError("generator has the wrong number of blocks")
            blocks = []
            for ctx, coeffs in zip(ctxs, g):
                if len(coeffs) != ctx.n:
                    raise CodeFileError(f"block over {ctx!r} needs {ctx.n} coefficients")
                blocks.append(QPoly(ctx, tuple(decode_int(ctx, int(a)) for a in coeffs)))
            basis.append(SumRankVector(shape, tuple(blocks)))
        return LinearSumRankCode(shape, tuple(basis), int(doc["designed_distance"]))
    except CodeFileError:
        raise
    except (KeyError, TypeError, ValueError, MSRDError) as exc:
        raise CodeFileError(f"malformed code file: {exc}") from exc


def loads_code(text: str) -> LinearSumRankCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CodeFileError("top level must be an object")
    return code_from_dict(doc)


def write_code(code: LinearSumRankCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(code))


def read_code(path: str | Path) -> LinearSumRankCode:
    return loads_code(Path(path).read_text())
