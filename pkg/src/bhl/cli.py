"""Command-line front end for the exact Hopf-algebra engine.

Subcommands
-----------
check-hopf             axiom suite on a builtin or spec-file Hopf datum
antipode               solve for the antipode by convolution inversion
yd-check               Yetter-Drinfeld axioms and braiding relations
bosonize               bosonization of a braided Hopf algebra, with maps
reconstruct            coend reconstruction, emitting the rebuilt datum
verify-reconstruction  full reconstruction verification report
stability              coend dimension under independent diagram enlargements

Input is either ``--builtin NAME`` (see ``bhl.catalog.BUILTIN_NAMES``) or a
JSON spec file giving the ambient category (field / group / bicharacter),
named graded objects, a Hopf datum (a builtin reference or explicit
structure matrices with entries like ``"1/2"`` or ``"2*z^3-1"``), and
optional Yetter-Drinfeld modules.

Reports are canonical JSON: sorted keys, two-space indent, LF endings, and
no volatile fields (timing appears only in the human summary), so equal
inputs yield byte-identical report files.  The ``BHL_THREADS`` environment
variable (a positive integer) caps internal parallelism; it never affects
results.  Exit status: 0 all checks pass, 1 a check failed or a computation
error was reported, 2 usage or input errors.
"""

import argparse
import hashlib
import json
import os
import sys
import time

from .braidedhopf import (
    BialgebraData, CheckReport, HopfAlgebraData, YDModuleData,
    bosonize_with_maps, check_bialgebra, check_hopf, check_hopf_morphism,
    check_yd, solve_antipode, yd_braiding, yd_braiding_inverse,
)
from .catalog import build, yd_samples
from .coend import (check_stability, compute_coend, default_diagram,
                    reconstruction_diagram)
from .comodcat import (act, comodule_dual, direct_sum_comodule,
                       regular_comodule, unit_comodule)
from .exactalg import (CycloField, EngineError, Matrix, format_scalar,
                       parse_scalar)
from .gradedcat import (AbelianGroup, Bicharacter, Context, GradedMorphism,
                        GradedObject, identity_mor, line_object, tensor_obj,
                        unit_object)
from .reconstruct import reconstruct


class SchemaError(ValueError):
    """A spec file or flag violates the input schema."""


def _require(cond, msg):
    if not cond:
        raise SchemaError(msg)


# ---------------------------------------------------------------------------
# spec-file (de)serialization
# ---------------------------------------------------------------------------

def context_from_spec(doc):
    fspec = doc.get("field")
    _require(isinstance(fspec, dict) and "cyclotomic_order" in fspec,
             "missing field.cyclotomic_order")
    field = CycloField(int(fspec["cyclotomic_order"]))
    gspec = doc.get("group") or {"invariant_factors": []}
    _require(isinstance(gspec, dict), "group must be an object")
    group = AbelianGroup(gspec.get("invariant_factors") or [])
    bspec = doc.get("bicharacter")
    if bspec is None:
        return Context(field, group, Bicharacter.trivial(group))
    _require(isinstance(bspec, dict) and "root_order" in bspec
             and "exponent_matrix" in bspec,
             "bicharacter needs root_order and exponent_matrix")
    r = int(bspec["root_order"])
    _require(r <= 2 or field.order % r == 0,
             "bicharacter root order %d unavailable in Q(zeta_%d)"
             % (r, field.order))
    try:
        chi = Bicharacter(group, r, bspec["exponent_matrix"])
    except (ValueError, AssertionError) as exc:
        raise SchemaError("bad bicharacter: %s" % exc) from None
    return Context(field, group, chi)


def context_to_spec(ctx):
    return {
        "field": {"cyclotomic_order": ctx.field.order},
        "group": {"invariant_factors": list(ctx.group.invariant_factors)},
        "bicharacter": {
            "root_order": ctx.chi.root_order,
            "exponent_matrix": [list(row) for row in ctx.chi.exponent_matrix],
        },
    }


def object_from_spec(ctx, name, doc):
    _require(isinstance(doc, dict) and isinstance(doc.get("labels"), list),
             "object %r needs a labels list" % name)
    labels = doc["labels"]
    degrees = doc.get("degrees")
    if degrees is None:
        degrees = [[0] * ctx.group.rank] * len(labels)
    _require(isinstance(degrees, list) and len(degrees) == len(labels),
             "object %r: degrees must match labels" % name)
    try:
        return GradedObject(ctx, [(str(l), tuple(d))
                                  for l, d in zip(labels, degrees)])
    except (AssertionError, TypeError) as exc:
        raise SchemaError("object %r: %s" % (name, exc)) from None


def object_to_spec(V):
    return {"labels": [l for l, _ in V.basis],
            "degrees": [list(d) for _, d in V.basis]}


def matrix_from_spec(field, doc, rows, cols, what):
    _require(isinstance(doc, list) and len(doc) == rows
             and all(isinstance(r, list) and len(r) == cols for r in doc),
             "%s must be a %dx%d array" % (what, rows, cols))
    try:
        ents = [[parse_scalar(field, str(e)) for e in row] for row in doc]
    except ValueError as exc:
        raise SchemaError("%s: %s" % (what, exc)) from None
    return Matrix(field, ents, cols=cols)


def matrix_to_spec(m):
    return [[format_scalar(e) for e in row] for row in m.entries]


def morphism_from_spec(field, doc, source, target, what):
    mat = matrix_from_spec(field, doc, target.dim, source.dim, what)
    try:
        return GradedMorphism(source, target, mat)
    except AssertionError:
        raise SchemaError("%s is not degree-preserving" % what) from None


def datum_from_spec(doc):
    """The Hopf (or bialgebra) datum of a spec document plus its named
    objects.  A ``hopf.builtin`` reference supplies its own context."""
    _require(isinstance(doc, dict), "spec root must be a JSON object")
    block = doc.get("hopf")
    _require(isinstance(block, dict), "missing hopf block")
    if "builtin" in block:
        try:
            datum = build(str(block["builtin"]))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
        ctx = datum.carrier.ctx
        objects = {name: object_from_spec(ctx, name, od)
                   for name, od in (doc.get("objects") or {}).items()}
        return datum, objects
    ctx = context_from_spec(doc)
    objects = {name: object_from_spec(ctx, name, od)
               for name, od in (doc.get("objects") or {}).items()}
    cname = block.get("carrier")
    _require(cname in objects, "hopf.carrier must name one of the objects")
    H = objects[cname]
    unit = unit_object(ctx)
    HH = tensor_obj(H, H)
    field = ctx.field
    m = morphism_from_spec(field, block.get("m"), HH, H, "hopf.m")
    u = morphism_from_spec(field, block.get("u"), unit, H, "hopf.u")
    delta = morphism_from_spec(field, block.get("delta"), H, HH, "hopf.delta")
    eps = morphism_from_spec(field, block.get("eps"), H, unit, "hopf.eps")
    if block.get("S") is None:
        return BialgebraData(H, m, u, delta, eps), objects
    S = morphism_from_spec(field, block.get("S"), H, H, "hopf.S")
    return HopfAlgebraData(H, m, u, delta, eps, S), objects


def hopf_to_spec(H):
    """A spec document for a Hopf or bialgebra datum; round-trips through
    datum_from_spec entrywise."""
    doc = context_to_spec(H.carrier.ctx)
    doc["objects"] = {"H": object_to_spec(H.carrier)}
    block = {
        "carrier": "H",
        "m": matrix_to_spec(H.m.matrix),
        "u": matrix_to_spec(H.u.matrix),
        "delta": matrix_to_spec(H.delta.matrix),
        "eps": matrix_to_spec(H.eps.matrix),
    }
    if isinstance(H, HopfAlgebraData):
        block["S"] = matrix_to_spec(H.S.matrix)
    doc["hopf"] = block
    return doc


def yd_from_spec(doc, hopf, objects):
    mods = []
    field = hopf.carrier.ctx.field
    for k, md in enumerate(doc.get("yd_modules") or []):
        _require(isinstance(md, dict), "yd_modules entries must be objects")
        name = str(md.get("name", "yd%d" % k))
        cname = md.get("carrier")
        _require(cname in objects,
                 "yd module %r: carrier must name one of the objects" % name)
        V = objects[cname]
        HV = tensor_obj(hopf.carrier, V)
        action = morphism_from_spec(field, md.get("action"), HV, V,
                                    "%s.action" % name)
        coaction = morphism_from_spec(field, md.get("coaction"), V, HV,
                                      "%s.coaction" % name)
        mods.append((name, YDModuleData(hopf, V, action, coaction)))
    return mods


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def canonical_json(payload):
    return json.dumps(payload, sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def checks_from_residuals(report, prefix=""):
    out = []
    for name, r in report.checks:
        zero = r.is_zero()
        entry = {"name": prefix + name,
                 "residual": "zero" if zero else "nonzero",
                 "status": "pass" if zero else "fail"}
        if not zero:
            i, j, v = report.witness(name)
            entry["witness"] = {"row": i, "col": j, "value": format_scalar(v)}
        out.append(entry)
    return out


def checks_from_flags(report, prefix=""):
    return [{"name": prefix + name, "status": "pass" if ok else "fail"}
            for name, ok in report.checks]


def ensure_hopf(datum):
    """Promote a bialgebra datum to a Hopf datum by solving for the
    antipode; a Hopf datum passes through unchanged."""
    if isinstance(datum, HopfAlgebraData):
        return datum
    S = solve_antipode(datum)
    return HopfAlgebraData(datum.carrier, datum.m, datum.u, datum.delta,
                           datum.eps, S)


def _parse_probes(spec, group):
    if not spec:
        return ()
    out = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            parts = tuple(int(x) for x in item.split(":"))
        except ValueError:
            raise SchemaError("bad probe %r" % item) from None
        _require(len(parts) == group.rank,
                 "probe %r must have %d coordinate(s)" % (item, group.rank))
        out.append(group.element(parts))
    return tuple(out)


# ---------------------------------------------------------------------------
# subcommands: each returns (payload-body, passed)
# ---------------------------------------------------------------------------

def cmd_check_hopf(datum, args, doc, objects):
    if isinstance(datum, HopfAlgebraData):
        rep = check_hopf(datum)
    else:
        rep = check_bialgebra(datum)
    return ({"dimensions": {"hopf": datum.carrier.dim},
             "checks": checks_from_residuals(rep)}, rep.passed)


def cmd_antipode(datum, args, doc, objects):
    B = BialgebraData(datum.carrier, datum.m, datum.u, datum.delta, datum.eps)
    S = solve_antipode(B)
    iH = identity_mor(B.carrier)
    counit_part = B.u * B.eps
    rep = CheckReport([
        ("antipode_left", B.m * (S @ iH) * B.delta - counit_part),
        ("antipode_right", B.m * (iH @ S) * B.delta - counit_part),
    ])
    checks = checks_from_residuals(rep)
    ok = rep.passed
    if isinstance(datum, HopfAlgebraData):
        same = S == datum.S
        checks.append({"name": "matches_given_antipode",
                       "status": "pass" if same else "fail"})
        ok = ok and same
    return ({"dimensions": {"hopf": B.carrier.dim},
             "antipode": matrix_to_spec(S.matrix), "checks": checks}, ok)


def cmd_yd_check(datum, args, doc, objects):
    H = ensure_hopf(datum)
    mods = yd_from_spec(doc, H, objects) if doc else []
    if not mods:
        mods = yd_samples(H)
    rows, all_ok = [], True
    for name, yd in mods:
        rep = check_yd(yd)
        iV = identity_mor(yd.carrier)
        c = yd_braiding(yd, yd)
        cinv = yd_braiding_inverse(yd, yd)
        braid_rep = CheckReport([
            ("braid_relation", (c @ iV) * (iV @ c) * (c @ iV)
             - (iV @ c) * (c @ iV) * (iV @ c)),
            ("braiding_inverse", c * cinv - identity_mor(c.source)),
        ])
        checks = checks_from_residuals(rep) + checks_from_residuals(braid_rep)
        ok = rep.passed and braid_rep.passed
        all_ok = all_ok and ok
        rows.append({"name": name, "dimension": yd.carrier.dim,
                     "checks": checks, "status": "pass" if ok else "fail"})
    return ({"dimensions": {"hopf": H.carrier.dim}, "modules": rows}, all_ok)


def cmd_bosonize(datum, args, doc, objects):
    R = ensure_hopf(datum)
    bos = bosonize_with_maps(R)
    checks = checks_from_residuals(check_hopf(bos.hopf), "hopf:")
    checks += checks_from_residuals(
        check_hopf_morphism(bos.projection, bos.hopf, bos.group_hopf),
        "projection:")
    checks += checks_from_residuals(
        check_hopf_morphism(bos.inclusion, bos.group_hopf, bos.hopf),
        "inclusion:")
    retract = (bos.projection * bos.inclusion
               == identity_mor(bos.group_hopf.carrier))
    checks.append({"name": "projection_retracts_inclusion",
                   "status": "pass" if retract else "fail"})
    ok = retract and all(c["status"] == "pass" for c in checks)
    return ({"dimensions": {"input": R.carrier.dim,
                            "group": bos.group_hopf.carrier.dim,
                            "bosonization": bos.hopf.carrier.dim},
             "hopf_datum": hopf_to_spec(bos.hopf),
             "checks": checks}, ok)


def _run_reconstruction(datum, args, emit_datum):
    H = ensure_hopf(datum)
    probes = _parse_probes(args.probes, H.carrier.ctx.group)
    r = reconstruct(H, diagram=reconstruction_diagram(H, probes))
    body = {
        "dimensions": {
            "hopf": H.carrier.dim,
            "coend": r.coend.dim,
            "ambient": sum(s.dim for s in r.coend.spaces),
            "blocks": len(r.coend.diagram.blocks),
        },
        "comparison": matrix_to_spec(r.comparison.matrix),
        "checks": checks_from_flags(r.checks),
    }
    if emit_datum:
        body["hopf_datum"] = hopf_to_spec(r.quotient_hopf)
    return body, r.passed


def cmd_reconstruct(datum, args, doc, objects):
    return _run_reconstruction(datum, args, emit_datum=True)


def cmd_verify_reconstruction(datum, args, doc, objects):
    return _run_reconstruction(datum, args, emit_datum=False)


def cmd_stability(datum, args, doc, objects):
    H = ensure_hopf(datum)
    ctx = H.carrier.ctx
    probes = _parse_probes(args.probes, ctx.group)
    base = default_diagram(H, probes)
    small = compute_coend(base)
    small.check_regular_surjective()
    reg = regular_comodule(H)
    enlargements = [
        ("action_line_block", act(reg, line_object(ctx, "s", ctx.group.zero))),
        ("direct_sum_block", direct_sum_comodule(reg, unit_comodule(H))),
        ("dual_block", comodule_dual(reg)),
    ]
    rows, all_ok = [], True
    for name, block in enlargements:
        big = compute_coend(base.enlarged(block))
        rep = check_stability(small, big)
        ok = rep.passed and big.dim == H.carrier.dim
        all_ok = all_ok and ok
        rows.append({"name": name, "dimension": big.dim,
                     "checks": checks_from_flags(rep),
                     "status": "pass" if ok else "fail"})
    return ({"dimensions": {"hopf": H.carrier.dim, "coend": small.dim},
             "enlargements": rows}, all_ok)


HANDLERS = {
    "check-hopf": cmd_check_hopf,
    "antipode": cmd_antipode,
    "yd-check": cmd_yd_check,
    "bosonize": cmd_bosonize,
    "reconstruct": cmd_reconstruct,
    "verify-reconstruction": cmd_verify_reconstruction,
    "stability": cmd_stability,
}

_HELP = {
    "check-hopf": "run the exact axiom suite on a Hopf datum",
    "antipode": "solve for the antipode by convolution inversion",
    "yd-check": "check Yetter-Drinfeld axioms and braiding relations",
    "bosonize": "bosonize a braided Hopf algebra and verify the maps",
    "reconstruct": "rebuild the Hopf datum from its comodule category",
    "verify-reconstruction": "run the full reconstruction verification",
    "stability": "check coend invariance under diagram enlargements",
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="bhl",
        description="exact checks and coend reconstruction for Hopf "
                    "algebras in braided graded categories")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in HANDLERS:
        sp = sub.add_parser(name, help=_HELP[name])
        sp.add_argument("spec", nargs="?", metavar="SPECFILE",
                        help="JSON spec file describing the input")
        sp.add_argument("--builtin", metavar="NAME",
                        help="catalog entry, e.g. sweedler or taft:2")
        sp.add_argument("--probes", default="", metavar="LIST",
                        help="extra probe degrees, comma-separated "
                             "(coordinates colon-separated)")
        sp.add_argument("--out", metavar="PATH",
                        help="write the JSON report here instead of stdout")
        sp.add_argument("--format", choices=["json"], default="json",
                        help="report format (json)")
    return p


def _threads_from_env():
    raw = os.environ.get("BHL_THREADS")
    if raw is None:
        return
    try:
        val = int(raw)
    except ValueError:
        val = 0
    _require(val >= 1, "BHL_THREADS must be a positive integer, got %r" % raw)


def _load_input(args):
    if args.builtin and args.spec:
        raise SchemaError("give either --builtin or a spec file, not both")
    if args.builtin:
        try:
            datum = build(args.builtin)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
        desc = {"builtin": args.builtin}
        digest = hashlib.sha256(canonical_json(desc).encode()).hexdigest()
        return datum, None, {}, desc, digest
    if not args.spec:
        raise SchemaError("provide --builtin NAME or a spec file path")
    with open(args.spec, "rb") as fh:
        raw = fh.read()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError("parse error at line %d column %d: %s"
                          % (exc.lineno, exc.colno, exc.msg)) from None
    datum, objects = datum_from_spec(doc)
    desc = {"file": os.path.basename(args.spec)}
    return datum, doc, objects, desc, hashlib.sha256(raw).hexdigest()


def _emit(payload, out_path):
    text = canonical_json(payload)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _summary(payload, elapsed, out_path):
    stream = sys.stdout if out_path else sys.stderr
    print("%s: %s (%.2fs)" % (payload["command"], payload["status"], elapsed),
          file=stream)
    for c in payload.get("checks", []):
        print("  %-44s %s" % (c["name"], c["status"]), file=stream)
    for m in payload.get("modules", []):
        print("  module %-37s %s" % (m["name"], m["status"]), file=stream)
    for e in payload.get("enlargements", []):
        print("  enlargement %-32s dim %d %s"
              % (e["name"], e["dimension"], e["status"]), file=stream)


def main(argv=None):
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        _threads_from_env()
        datum, doc, objects, desc, digest = _load_input(args)
        body, passed = HANDLERS[args.command](datum, args, doc, objects)
    except SchemaError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except EngineError as exc:
        payload = {"command": args.command,
                   "error": {"code": exc.code, "message": str(exc)},
                   "status": "error"}
        _emit(payload, args.out)
        print("error[%s]: %s" % (exc.code, exc), file=sys.stderr)
        return 1
    payload = {"command": args.command, "inputs": desc, "digest": digest,
               "status": "pass" if passed else "fail"}
    payload.update(body)
    _emit(payload, args.out)
    _summary(payload, time.monotonic() - started, args.out)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
