"""Turn manifest declarations into objects and execute commands."""
from __future__ import annotations

import re
import time
from fractions import Fraction

from .. import operad2
from ..errors import NilprodError
from ..exactlin import ZZ, FgAbGroup, Matrix, Module, Ring, ring_from_name, tensor_fgab
from ..exactlin import modules as mod
from ..homology import (central_extension_validate, ce_homology, exactness_check, ganea_sequence,
                        lcs_ganea_application)
from ..nilgrp import FpGroupPresentation, abelianization_gp, bilinear_product_gp, nil2_coproduct, symmetry_gp
from ..nonassoc import (SCAlgebra, abelian_extension_analysis, bilinear_product_sc, center, check_identity,
                        commute_nil_birkhoff_test, j_filtration, lower_central_series, nilpotentisation,
                        rep_tensor_lie)
from ..nonassoc.algebra import normalize_variety, product_space
from ..nonassoc.reps import LieRep, adjoint_rep, trivial_rep
from ..suites import check_suites
from ..table1 import table1
from ..xmod import AbCrossedModule, GroupXModInput, compare_tensors, pxmod_tensor, xmod_abelianize, xmod_tensor
from .manifest import Declaration, Manifest, ManifestError, signature

SCHEMA = "nilprod.result/1"
BRUTE_FORCE_LIMIT = 4096


class BuildError(ManifestError):
    pass


# -- value syntax ------------------------------------------------------------------

_NUMBER = re.compile(r"-?\d+(?:/\d+)?")


def parse_numbers(text: str):
    """Nested lists of integers and p/q rationals, e.g. ``[[1, -1/2], [0, 3]]``."""
    text = text.strip()

    def skip(pos):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        return pos

    def value(pos):
        pos = skip(pos)
        if pos < len(text) and text[pos] == "[":
            items, pos = [], skip(pos + 1)
            if pos < len(text) and text[pos] == "]":
                return items, pos + 1
            while True:
                item, pos = value(pos)
                items.append(item)
                pos = skip(pos)
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                elif pos < len(text) and text[pos] == "]":
                    return items, pos + 1
                else:
                    raise ValueError(f"expected ',' or ']' at column {pos + 1} of {text!r}")
        m = _NUMBER.match(text, pos)
        if not m:
            raise ValueError(f"expected a number at column {pos + 1} of {text!r}")
        x = Fraction(m.group())
        return (int(x) if x.denominator == 1 else x), m.end()

    out, pos = value(0)
    if skip(pos) != len(text):
        raise ValueError(f"trailing text at column {pos + 1} of {text!r}")
    return out


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*e(\d+)\s*")


def parse_lincomb(text: str, dim: int, F: Ring) -> list:
    """``2 e1 - 1/2 e3``, ``0`` or an explicit vector ``[0, 0, 1]``."""
    text = text.strip()
    if text.startswith("["):
        vals = parse_numbers(text)
        if len(vals) != dim:
            raise ValueError(f"vector {text} must have {dim} entries")
        return [F.convert(v) for v in vals]
    vec = [F.zero] * dim
    if text == "0":
        return vec
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot read a linear combination at column {pos + 1} of {text!r}")
        if pos and not m.group(1):
            raise ValueError(f"missing '+' or '-' before column {pos + 1} of {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        k = int(m.group(3))
        if not 1 <= k <= dim:
            raise ValueError(f"e{k} is out of range for dimension {dim}")
        vec[k - 1] = vec[k - 1] + F.convert(sign * coef)
        pos = m.end()
    return vec


def _basis_index(token: str, prefix: str, size: int) -> int:
    m = re.fullmatch(prefix + r"(\d+)", token)
    if not m or not 1 <= int(m.group(1)) <= size:
        raise ValueError(f"expected {prefix}1..{prefix}{size}, got {token!r}")
    return int(m.group(1)) - 1


def _truthy(text: str | None) -> bool:
    return (text or "").strip().lower() in ("1", "true", "yes", "on")


def _split_top_level(text: str) -> list[str]:
    """Comma split that keeps ``[a,b]`` commutators intact."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur).strip())
    return parts


def _words(text: str | None) -> list[str]:
    return [w for w in re.split(r"[\s,]+", text or "") if w]


# -- building objects ----------------------------------------------------------------

class Workspace:
    """Lazily built objects for a manifest's declarations."""

    def __init__(self, manifest: Manifest):
        self.manifest = manifest
        self._cache: dict[str, object] = {}

    def get(self, name: str):
        if name not in self._cache:
            d = self.manifest.lookup(name)
            try:
                self._cache[name] = getattr(self, "_build_" + d.base_kind)(d)
            except ManifestError:
                raise
            except (NilprodError, ValueError, KeyError) as exc:
                raise BuildError(f"cannot build {d.kind} '{name}': {exc}", d.line) from None
        return self._cache[name]

    @staticmethod
    def _need(d: Declaration, key: str) -> str:
        v = d.get(key)
        if v is None:
            raise BuildError(f"{d.kind} '{d.name}' needs '{key}'", d.line)
        return v

    def _build_fgab(self, d):
        if d.get("factors") is not None:
            return FgAbGroup.from_orders(parse_numbers(d.get("factors")))
        return FgAbGroup.free(int(self._need(d, "rank")))

    def _build_gp(self, d):
        gens = _words(self._need(d, "generators"))
        rels = _split_top_level(d.get("relators", ""))
        return FpGroupPresentation.parse(gens, rels)

    def _build_operad(self, d):
        R = ring_from_name(d.get("ring", "Z"))
        if d.get("preset"):
            return operad2.preset_operad(d.get("preset"), R)
        p2 = parse_numbers(self._need(d, "p2"))
        M = Module.free(R, p2) if isinstance(p2, int) else (Module(R, tuple(p2)) if not R.is_field
                                                               else Module.free(R, len(p2)))
        t = Matrix.from_rows(R, parse_numbers(self._need(d, "t")), M.n)
        return operad2.operad_from_bifunctor_data(R, M, t, d.name)

    def _build_nil2alg(self, d):
        op = self.get(self._need(d, "operad"))
        R = op.ring
        if d.get("module") is not None:
            orders = parse_numbers(d.get("module"))
            A = Module.free(R, len(orders)) if R.is_field else Module(R, tuple(orders))
        else:
            A = Module.free(R, int(self._need(d, "dim")))
        if _truthy(d.get("abelian")):
            return operad2.abelian_algebra(op, A)
        if _truthy(d.get("free")):
            rel = d.get("relations")
            rel_m = None
            if rel:
                cols = parse_numbers(rel)
                rel_m = Matrix.from_cols(R, cols, len(cols[0]))
            return operad2.free_nil2_algebra(op, A, rel_m)
        dec = parse_numbers(d.get("decomposables", "[]"))
        D = Matrix.from_cols(R, dec, A.n) if dec else Matrix.zeros(R, A.n, 0)
        prods = {}
        for e in d.prefixed("product"):
            words = e.key.split()[1:]
            i = _basis_index(words[0], "e", A.n)
            j = _basis_index(words[1], "e", A.n)
            k = _basis_index(words[2], "x", op.p) if len(words) > 2 else 0
            prods[(i, j, k)] = parse_lincomb(e.value, A.n, R)
        return operad2.require_valid(operad2.algebra_from_products(op, A, D, prods))

    def _build_sc(self, d):
        F = ring_from_name(d.get("field", "Q"))
        variety = normalize_variety(d.get("variety") or (d.kind if d.kind != "sc" else "Lie"))
        n = int(self._need(d, "dim"))
        prods = {}
        for word in ("bracket", "product"):
            for e in d.prefixed(word):
                _, a, b = e.key.split()
                prods[(_basis_index(a, "e", n), _basis_index(b, "e", n))] = parse_lincomb(e.value, n, F)
        mirror = variety in ("Lie", "Comm")
        return SCAlgebra.from_products(F, n, prods, variety, mirror=mirror, name=d.name)

    def _build_lierep(self, d):
        g = self.get(self._need(d, "algebra"))
        preset = d.get("preset")
        if preset == "adjoint":
            return adjoint_rep(g)
        if preset == "trivial":
            return trivial_rep(g, int(d.get("dim", "1")))
        m = int(self._need(d, "dim"))
        mats = [Matrix.zeros(g.field, m, m) for _ in range(g.dim)]
        for e in d.prefixed("rho"):
            k = _basis_index(e.key.split()[1], "e", g.dim)
            mats[k] = Matrix.from_rows(g.field, parse_numbers(e.value), m)
        return LieRep(g, m, tuple(mats))

    def _build_xmod(self, d):
        if d.get("top_generators") is not None:
            G = FpGroupPresentation.parse(_words(d.get("top_generators")),
                                          _split_top_level(d.get("top_relators", "")))
            A = FpGroupPresentation.parse(_words(d.get("middle_generators")),
                                          _split_top_level(d.get("middle_relators", "")))
            action = {e.key.split()[1]: parse_numbers(e.value) for e in d.prefixed("action")}
            boundary = {e.key.split()[1]: e.value for e in d.prefixed("boundary")}
            return xmod_abelianize(GroupXModInput(G, A, action, boundary))
        top = parse_numbers(self._need(d, "top"))
        middle = parse_numbers(self._need(d, "middle"))
        rows = parse_numbers(d.get("boundary", "[]"))
        if not rows:
            rows = [[0] * len(middle) for _ in top]
        return AbCrossedModule.build(top, middle, rows)

    def _build_subspace(self, d):
        g = self.get(self._need(d, "algebra"))
        span = self._need(d, "span").strip()
        if span == "center":
            return g, center(g)
        if span == "derived":
            return g, product_space(g, g.full(), g.full())
        m = re.fullmatch(r"lcs\s+(\d+)", span)
        if m:
            return g, j_filtration(g, int(m.group(1)))
        vecs = parse_numbers(span)
        return g, g.span([[g.field.convert(x) for x in v] for v in vecs])

    _build_central = _build_subspace
    _build_ideal = _build_subspace


# -- commands -----------------------------------------------------------------------

def _flags(words) -> dict:
    """``--key v1 v2`` groups; bare words before any flag go under ''."""
    out, key = {"": []}, ""
    for w in words:
        if w.startswith("--"):
            key = w[2:]
            out.setdefault(key, [])
        else:
            out[key].append(w)
    return out


def _module_json(M: Module):
    if M.ring.is_field:
        return {"dim": M.n}
    return {"invariant_factors": list(M.invariants().invariant_factors)}


def _subspace_dims(chain) -> list[int]:
    return [s.dim for s in chain]


def execute(ws: Workspace, words, seed: int):
    """(output, verdict) for one command; verdict is None when there is nothing to judge."""
    kinds, rest = signature(words)
    names = rest[:len(kinds)]
    extra = rest[len(kinds):]
    objs = [ws.get(n) for n in names]
    verb = words[0]
    sel = words[1] if verb in ("tensor", "coproduct", "symmetry") else None

    if verb == "tensor":
        X, Y = objs
        if sel == "gp":
            G = bilinear_product_gp(X, Y)
            return {"invariant_factors": G.to_json(), "group": str(G)}, None
        if sel == "fgab":
            G = tensor_fgab(X, Y)
            return {"invariant_factors": G.to_json(), "group": str(G)}, None
        if sel == "nil2":
            return _module_json(operad2.bilinear2(X, Y).A), None
        if sel == "sc":
            return bilinear_product_sc(X, Y).to_json(), None
        if sel == "xmod":
            return xmod_tensor(X, Y).result.to_json(), None
        if sel == "rep":
            T = rep_tensor_lie(X, Y)
            return T.to_json(), T.is_valid()
    if verb == "pxmod":
        P = pxmod_tensor(*objs)
        c = compare_tensors(*objs)
        ok = c.surjective and c.kernel_matches and c.boundaries_commute
        return {"precrossed": P.to_json(), "surjects_onto_tensor": c.surjective,
                "kernel_matches": c.kernel_matches, "boundaries_commute": c.boundaries_commute}, ok
    if verb == "coproduct":
        X, Y = objs
        if sel == "fgab":
            G = nil2_coproduct(X, Y)
            out = {"central": G.T.to_json(), "finite": G.is_finite(), "order": G.order()}
            if G.is_finite() and G.order() <= BRUTE_FORCE_LIMIT:
                out["center_order"] = len(G.center())
                out["nilpotency_class"] = G.nilpotency_class()
            return out, None
        C = operad2.coproduct2(X, Y)
        rep = operad2.validate_algebra(C.algebra)
        return {"module": _module_json(C.algebra.A), "mixed": _module_json(C.mixed), "valid": rep.valid}, rep.valid
    if verb == "symmetry":
        X, Y = objs
        M = symmetry_gp(X, Y) if sel == "fgab" else operad2.symmetry2(X, Y)
        return {"matrix": M.to_json()}, None
    if verb == "abelianize":
        (X,) = objs
        kind = ws.manifest.lookup(names[0]).base_kind
        if kind == "gp":
            G = abelianization_gp(X)
            return {"invariant_factors": G.to_json(), "group": str(G)}, None
        if kind == "sc":
            return {"dim": nilpotentisation(X, 1).algebra.dim}, None
        if kind == "nil2alg":
            return _module_json(X.abar.module), None
        return X.to_json(), None
    if verb == "validate":
        (X,) = objs
        kind = ws.manifest.lookup(names[0]).base_kind
        if kind == "nil2alg":
            rep = operad2.validate_algebra(X)
            return rep.to_json(), rep.valid
        if kind == "sc":
            rep = check_identity(X)
            return rep.to_json(), rep.valid
        if kind == "lierep":
            bad = X.axiom_failures()
            return {"valid": not bad, "failures": bad[:20]}, not bad
        return X.describe(), True
    if verb == "describe":
        (X,) = objs
        if hasattr(X, "to_json"):
            return X.to_json(), None
        if hasattr(X, "describe"):
            return X.describe(), None
        if isinstance(X, tuple):
            g, S = X
            return {"algebra": names[0], "subspace": S.to_json()}, None
        if isinstance(X, FpGroupPresentation):
            return {"generators": list(X.generators), "relators": X.relator_strings()}, None
        return {"repr": repr(X)}, None
    if verb == "lcs":
        (X,) = objs
        if isinstance(X, operad2.Nil2Algebra):
            J = operad2.j_filtration2(X)
            return {"generators": [m.to_json() for m in J],
                    "gamma2_is_decomposables": mod.sub_eq(X.A, J[1], X.D),
                    "gamma3_zero": all(X.A.is_zero(c) for c in J[2].cols())}, None
        limit = int(extra[0]) if extra else None
        L = lower_central_series(X, limit)
        return {"dims": L.dims(), "nilpotent": L.nilpotent, "class": L.nilpotency_class}, None
    if verb == "homology":
        return ce_homology(objs[0]).to_json(), None
    if verb == "ganea":
        g, (_, K) = objs[0], objs[1]
        S = ganea_sequence(central_extension_validate(g, K))
        rep = exactness_check(S)
        out = S.to_json()
        out["exactness"] = rep.to_json()
        return out, rep.exact
    if verb == "lcs-ganea":
        n = int(extra[0]) if extra else 2
        rep = lcs_ganea_application(objs[0], n)
        return rep.to_json(), rep.exact
    if verb == "nil":
        n = int(extra[0]) if extra else 1
        Q = nilpotentisation(objs[0], n)
        return {"n": n, "dim": Q.algebra.dim, "kernel_dim": Q.kernel.dim}, None
    if verb == "birkhoff":
        n = int(extra[0]) if extra else 1
        target = extra[1] if len(extra) > 1 else "Lie-from-Leib"
        rep = commute_nil_birkhoff_test(objs[0], n, target)
        return rep.to_json(), rep.isomorphic
    if verb == "extension":
        X, (_, A) = objs
        return abelian_extension_analysis(X, A).to_json(), None
    if verb == "table1":
        return run_table1(_flags(extra))
    if verb == "check":
        f = _flags(extra)
        cases = int(f.get("cases", ["20"])[0])
        res = check_suites(f[""], seed=seed, case_count=cases)
        return {"suites": [r.to_json() for r in res]}, all(r.ok for r in res)
    raise KeyError(f"unknown command {verb!r}")


def table1_ring(name: str, p: int | None = None) -> Ring:
    if name.lower() in ("fp", "gfp"):
        return ring_from_name(f"F{p or 5}")
    return ring_from_name(name)


def run_table1(f: dict):
    R = table1_ring(f.get("ring", ["Q"])[0], int(f["p"][0]) if f.get("p") else None)
    dims = [int(x) for x in f.get("dims", ["1", "1"])]
    if len(dims) != 2:
        raise ValueError("--dims takes two integers")
    left = [int(x) for x in f["left"]] if f.get("left") else None
    right = [int(x) for x in f["right"]] if f.get("right") else None
    if left is not None:
        dims[0] = len(left)
    if right is not None:
        dims[1] = len(right)
    rows = table1(R, dims, left, right)
    return {"ring": R.name, "dims": dims, "rows": [r.to_json() for r in rows]}, all(r.match for r in rows)


def run(manifest: Manifest, seed: int = 0) -> dict:
    ws = Workspace(manifest)
    t0 = time.perf_counter()
    results = []
    for c in manifest.commands:
        t1 = time.perf_counter()
        entry = {"command": c.text, "line": c.line}
        try:
            output, verdict = execute(ws, c.words, seed)
            entry["output"] = output
            entry["verdict"] = verdict
            entry["ok"] = verdict is not False
        except (NilprodError, ValueError, KeyError) as exc:
            entry["error"] = {"type": type(exc).__name__, "message": str(exc)}
            entry["ok"] = False
        entry["elapsed_s"] = round(time.perf_counter() - t1, 4)
        results.append(entry)
    return {"schema": SCHEMA, "seed": seed, "ok": all(r["ok"] for r in results),
            "results": results, "elapsed_s": round(time.perf_counter() - t0, 4)}


TIMING_KEYS = ("elapsed_s",)


def strip_timing(doc):
    """Drop timing fields so two runs can be compared byte for byte."""
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k not in TIMING_KEYS}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc
