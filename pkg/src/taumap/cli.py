"""Command-line front end: ``taumap <command> [options] FILE``.

Exit codes: 0 success (a negative verdict is still a success), 1 input
error, 2 verification failure. A directory argument runs the command on
every regular file in it, in filename order.
"""

import argparse
import json
import sys
from pathlib import Path

from .algebra import AlgebraError
from .artranslation import five_term_check, tau
from .fileformat import FileFormatError, emit_algebra_file, load_algebra
from .k0 import (
    TauMapError,
    apply,
    build_nakayama_tau_map,
    coxeter_matrix,
    decide_tau_map,
    dim_vector,
)
from .nakayama import (
    NakayamaError,
    NakayamaIndec,
    closed_form_translate,
    enumerate_indecomposables,
    identify,
    kupisch_series,
    materialize,
    nakayama_dim_vector,
)
from .quiver import QuiverError
from .representation import RepresentationError, ext_quiver, is_projective, simple

OK, INPUT_ERROR, VERIFY_FAILED = 0, 1, 2

INPUT_ERRORS = (FileFormatError, AlgebraError, QuiverError, NakayamaError,
                RepresentationError, TauMapError, OSError, UnicodeDecodeError)


class InputError(ValueError):
    pass


def _vertex(a, tok):
    for v in a.vertices:
        if str(v) == tok:
            return v
    raise InputError(f"unknown vertex {tok!r}")


def _component_of(a, v):
    for comp in a.components():
        if v in comp.quiver.vindex:
            return comp
    raise InputError(f"unknown vertex {v!r}")


def _nakayama_components(a):
    if not a.is_nakayama():
        raise InputError("algebra is not Nakayama")
    return a.components()


def _fmt_vec(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


# -- commands -------------------------------------------------------------------
# Each returns (report dict, exit code); the caller fills in command and algebra.

def cmd_info(a, args):
    comps = [list(b) for b in a.quiver.components()]
    data = {"vertices": list(a.vertices), "arrows": len(a.quiver.arrows),
            "relations": [str(p) for p in a.relations], "basis_size": len(a.basis),
            "components": comps}
    return {"data": data}, OK


def cmd_cartan(a, args):
    return {"matrix": a.cartan_matrix()}, OK


def cmd_coxeter(a, args):
    res = coxeter_matrix(a, args.sign)
    if res.singular:
        return {"verdict": "singular", "data": {"sign": args.sign}}, OK
    out = {"verdict": "integral" if res.integral else "non_integral",
           "data": {"sign": args.sign}}
    if res.integral:
        out["matrix"] = [[int(x) for x in row] for row in res.matrix]
    else:
        out["data"]["rational_matrix"] = [[str(x) for x in row] for row in res.matrix]
    return out, OK


def cmd_ext_quiver(a, args):
    q = ext_quiver(a)
    sources, sinks = q.sources_and_sinks()
    data = {"arrows": [[x.source, x.target] for x in q.arrows],
            "sources": sorted(sources, key=a.vertices.index),
            "sinks": sorted(sinks, key=a.vertices.index)}
    return {"data": data}, OK


def cmd_is_nakayama(a, args):
    return {"verdict": "nakayama" if a.is_nakayama() else "not_nakayama"}, OK


def cmd_tau(a, args):
    if (args.module is None) == (args.simple is None):
        raise InputError("give exactly one of --module i,l or --simple v")
    if args.simple is not None:
        v = _vertex(a, args.simple)
        s = simple(a, v)
        if is_projective(s):
            return {"verdict": "projective", "data": {"module": f"S{v}"}}, OK
        t = tau(s)
        return {"verdict": "translated",
                "data": {"module": f"S{v}", "dim_vector": list(dim_vector(t))}}, OK
    parts = args.module.split(",")
    if len(parts) != 2 or not parts[1].strip().isdigit():
        raise InputError("--module expects i,l")
    _nakayama_components(a)
    v = _vertex(a, parts[0].strip())
    comp = _component_of(a, v)
    k = kupisch_series(comp)
    m = NakayamaIndec(v, int(parts[1]))
    closed = closed_form_translate(k, m, "tau")
    data = {"module": str(m)}
    if closed is None:
        return {"verdict": "projective", "data": data}, OK
    engine = tau(materialize(comp, m))
    named = identify(k, engine)
    ok = named == closed
    data.update(tau=str(closed), dim_vector=list(_lift(a, comp, dim_vector(engine))))
    checks = [{"name": "engine tau agrees with closed form", "pass": ok}]
    return {"verdict": "translated", "data": data, "checks": checks}, OK if ok else VERIFY_FAILED


def _lift(a, comp, vec):
    out = [0] * a.n
    for v, x in zip(comp.vertices, vec):
        out[a.quiver.vindex[v]] = x
    return out


def cmd_tau_map(a, args):
    v = decide_tau_map(a)
    out = {"verdict": v.status, "data": {"components": v.reason}}
    if v.witness is not None:
        out["matrix"] = [list(r) for r in v.witness]
    return out, OK


def cmd_verify(a, args):
    checks = []
    for comp in _nakayama_components(a):
        k = kupisch_series(comp)
        phi = build_nakayama_tau_map(k)
        for info in enumerate_indecomposables(k):
            if info.projective:
                continue
            m = info.module
            t = tau(materialize(comp, m))
            ok = (apply(phi, nakayama_dim_vector(k, m)) == dim_vector(t)
                  and identify(k, t) == closed_form_translate(k, m, "tau"))
            checks.append({"name": str(m), "pass": ok})
    failed = sum(not c["pass"] for c in checks)
    out = {"verdict": "pass" if not failed else "fail", "checks": checks,
           "data": {"checked": len(checks), "failed": failed}}
    return out, OK if not failed else VERIFY_FAILED


def cmd_reduce(a, args):
    v = _vertex(a, args.vertex)
    red = a.delete_source_vertex(v)
    return {"data": {"file": emit_algebra_file(red)}}, OK


def cmd_five_term(a, args):
    v = _vertex(a, args.simple)
    rep = five_term_check(simple(a, v))
    if not rep.applicable:
        return {"verdict": "not_applicable", "data": {"reason": rep.reason}}, OK
    checks = [{"name": n, "pass": bool(p)} for n, p in rep.checks.items()]
    dims = {k: list(d) for k, d in rep.dims.items()}
    return ({"verdict": "pass" if rep.passed else "fail", "checks": checks,
             "data": {"dims": dims}}, OK if rep.passed else VERIFY_FAILED)


COMMANDS = {
    "info": cmd_info,
    "cartan": cmd_cartan,
    "coxeter": cmd_coxeter,
    "ext-quiver": cmd_ext_quiver,
    "is-nakayama": cmd_is_nakayama,
    "tau": cmd_tau,
    "tau-map": cmd_tau_map,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "five-term": cmd_five_term,
}


# -- reporting ------------------------------------------------------------------

def run_command(name, args, path):
    """Run one command on one file; returns ``(report, exit code)``."""
    report = {"command": name}
    try:
        a = load_algebra(path)
        report["algebra"] = {"name": a.name, "dim": a.dim, "nakayama": a.is_nakayama()}
        body, code = COMMANDS[name](a, args)
    except (InputError,) + INPUT_ERRORS as e:
        report["error"] = str(e)
        return report, INPUT_ERROR
    report.update(body)
    return report, code


def emit_report(report, fmt="text"):
    if fmt == "json":
        return json.dumps(report, default=str)
    lines = []
    if "file" in report:
        lines.append(f"file: {report['file']}")
    lines.append(f"command: {report['command']}")
    if "error" in report:
        lines.append(f"error: {report['error']}")
        return "\n".join(lines)
    alg = report["algebra"]
    lines.append(f"algebra: {alg['name'] or '-'} (dim {alg['dim']}, "
                 f"nakayama {'yes' if alg['nakayama'] else 'no'})")
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict']}")
    if "matrix" in report:
        lines.append("matrix:")
        lines.extend(" ".join(str(x) for x in row) for row in report["matrix"])
    data = report.get("data", {})
    for key, val in data.items():
        if key == "file":
            lines.append("file contents:")
            lines.extend(val.rstrip("\n").splitlines())
        elif key == "rational_matrix":
            lines.append("rational matrix:")
            lines.extend(" ".join(row) for row in val)
        elif key == "components" and report["command"] == "tau-map":
            for c in val:
                lines.append(f"component {' '.join(str(v) for v in c['vertices'])}: "
                             f"{c['status']} ({c['branch']})")
        elif key == "dims":
            for k, d in val.items():
                lines.append(f"dim {k}: {_fmt_vec(d)}")
        elif isinstance(val, (list, tuple)) and key == "dim_vector":
            lines.append(f"{key}: {_fmt_vec(val)}")
        else:
            lines.append(f"{key}: {val}")
    for c in report.get("checks", []):
        lines.append(f"check {c['name']}: {'pass' if c['pass'] else 'FAIL'}")
    return "\n".join(lines)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="algebra file, or a directory of them")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="taumap", description="tau-maps of monomial algebras")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("info", "cartan", "ext-quiver", "is-nakayama", "tau-map", "verify"):
        sub.add_parser(name, parents=[common])
    c = sub.add_parser("coxeter", parents=[common])
    c.add_argument("--sign", choices=["plus", "minus"], default="plus")
    t = sub.add_parser("tau", parents=[common])
    t.add_argument("--module", help="Nakayama indecomposable M(i,l) as i,l")
    t.add_argument("--simple", help="vertex of a simple module")
    r = sub.add_parser("reduce", parents=[common])
    r.add_argument("--vertex", required=True, help="source vertex to delete")
    f = sub.add_parser("five-term", parents=[common])
    f.add_argument("--simple", required=True, help="vertex of the simple module M")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    fmt = "json" if args.json else "text"
    path = Path(args.path)
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.is_file() and not p.name.startswith("."))
        batch = True
    else:
        files, batch = [path], False
    worst = OK
    for k, fp in enumerate(files):
        report, code = run_command(args.command, args, fp)
        if batch:
            report = {"file": fp.name, **report}
        elif code == OK and args.command == "reduce" and fmt == "text":
            # a single reduce emits a parseable algebra file
            sys.stdout.write(report["data"]["file"])
            continue
        out = emit_report(report, fmt)
        stream = sys.stderr if code == INPUT_ERROR and fmt == "text" and not batch else sys.stdout
        if batch and fmt == "text" and k:
            print(file=stream)
        print(out, file=stream)
        if code == VERIFY_FAILED or worst == VERIFY_FAILED:
            worst = VERIFY_FAILED
        else:
            worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
