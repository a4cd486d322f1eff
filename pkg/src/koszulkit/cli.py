"""Command-line client for the compute service.

The CLI is a thin HTTP client: every subcommand builds one request, posts it
to the service, and renders the response.  By default the FastAPI app is
mounted in-process (no network); --server points the same commands at a
running instance instead.

Exit codes: 0 success/PASS, 1 refutation or reproduction mismatch, 2 usage or
input error, 3 exhaustive search aborted on its configured bounds.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from . import SCHEMA_VERSION

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


def call_service(path: str, payload: dict, server: str | None):
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            response = client.post(path, json=payload)
        return response.status_code, response.json()

    async def go():
        from .service.app import create_app

        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://koszulkit.local", timeout=None
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()

    return asyncio.run(go())


def _emit(args, data: dict, text_lines) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(f"# koszulkit schema {SCHEMA_VERSION}")
        for line in text_lines:
            print(line)


def _fail(args, status: int, data: dict) -> int:
    kind = data.get("kind", "error")
    message = data.get("error", str(data))
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(f"error [{kind}]: {message}", file=sys.stderr)
    if status == 409 or kind == "bound-exceeded":
        return EXIT_BOUND
    return EXIT_USAGE


def _ideal_payload(args) -> dict:
    text = args.ideal
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as handle:
            text = handle.read()
    return {"ideal_text": text}


def cmd_parse(args) -> int:
    status, data = call_service("/v1/parse", {"text": args.text}, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"canonical: {data['canonical']}",
             f"generators: {len(data['ideal']['gens'])}"]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_betti(args) -> int:
    payload = _ideal_payload(args)
    payload["field"] = args.field
    status, data = call_service("/v1/betti", payload, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"field: {data['field']}", data["diagram"],
             f"regularity(S/I) = {data['regularity']}",
             f"regularity(I)   = {data['ideal_regularity']}"]
    for corner in data["corners"]:
        lines.append(
            f"corner (t={corner['t']}, r={corner['r']}): "
            f"extremal betti {corner['dim']}"
        )
    _emit(args, data, lines)
    return EXIT_OK


def cmd_homology(args) -> int:
    payload = _ideal_payload(args)
    payload.update({"i": args.i, "field": args.field,
                    "representatives": not args.no_representatives})
    if args.multidegree:
        payload["multidegree"] = _parse_multidegree(args.multidegree)
    status, data = call_service("/v1/homology", payload, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"field: {data['field']}  i: {data['i']}  total dim: {data['total']}"]
    for strand in data["strands"]:
        lines.append(
            f"multidegree {tuple(strand['multidegree'])}: "
            f"dim {strand['betti']} (strand {strand['strand_dim']}, "
            f"cycles {strand['cycles']}, boundaries {strand['boundaries']})"
        )
        for rep in strand["representatives"]:
            terms = " + ".join(
                f"({t['coeff']})*{_render_term(t)}" for t in rep["terms"]
            )
            lines.append(f"    class: {terms}")
    _emit(args, data, lines)
    return EXIT_OK


def _render_term(term: dict) -> str:
    from .monomials import render_monomial

    body = render_monomial(tuple(term["u"]))
    sigma = ",".join(str(s) for s in term["sigma"])
    return f"{body}*e{{{sigma}}}"


def cmd_cycles(args) -> int:
    payload = _ideal_payload(args)
    payload.update({"i": args.i, "field": args.field, "max_length": args.max_length})
    if args.multidegree:
        payload["multidegree"] = _parse_multidegree(args.multidegree)
    status, data = call_service("/v1/cycles", payload, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"field: {data['field']}  i: {data['i']}"]
    for strand in data["strands"]:
        if strand["status"] == "ok":
            lines.append(
                f"multidegree {tuple(strand['multidegree'])}: betti {strand['betti']}, "
                f"spanned by cycles of length <= {strand['spanning_length']}"
            )
        else:
            lines.append(
                f"multidegree {tuple(strand['multidegree'])}: {strand['note']}"
            )
    _emit(args, data, lines)
    return EXIT_BOUND if data["bound_exceeded"] else EXIT_OK


def cmd_pborel(args) -> int:
    monomial = _parse_monomial_text(args.monomial, args.n)
    if monomial is None:
        print("error: could not read the monomial", file=sys.stderr)
        return EXIT_USAGE
    payload = {"monomial": list(monomial), "p": args.p}
    status, data = call_service("/v1/pborel", payload, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"ideal: {data['canonical']}",
             f"generators: {data['generator_count']}",
             f"p-Borel: {data['is_p_borel']}  strongly stable: {data['is_strongly_stable']}"]
    for q, row in enumerate(data["alpha"], start=1):
        if any(row):
            lines.append(f"prefix (x1..x{q}): layer exponents {row}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_chain(args) -> int:
    status, data = call_service("/v1/chain", _ideal_payload(args), args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = []
    for stage in data["stages"]:
        lines.append(
            f"stage {stage['index']}: subring size {stage['n_stage']}, "
            f"top socle degree {stage['top_socle_degree']}, "
            f"corner dimension {stage['corner_dimension']}"
        )
    for corner in data["corner_candidates"]:
        lines.append(
            f"corner candidate (t={corner['t']}, r={corner['r']}), "
            f"dimension {corner['dim']}"
        )
    _emit(args, data, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = {"suite": args.suite, "seed": args.seed}
    if args.trials is not None:
        payload["trials"] = args.trials
    status, data = call_service("/v1/verify", payload, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [
        f"suite {data['suite']}: {'PASS' if data['passed'] else 'REFUTED'} "
        f"({data['performed']} instances, {data['elapsed']}s)"
    ]
    for entry in data["counters"].get("log", []):
        lines.append(f"trial: {json.dumps(entry, sort_keys=True)}")
    for note in data["notes"]:
        lines.append(f"note: {note}")
    for ref in data["refutations"]:
        lines.append(f"counterexample: {json.dumps(ref['data'], sort_keys=True)}")
        lines.append(f"replay: {ref['replay']}")
    _emit(args, data, lines)
    return EXIT_OK if data["passed"] else EXIT_REFUTED


def cmd_reproduce(args) -> int:
    status, data = call_service("/v1/reproduce", {"example": args.example}, args.server)
    if status != 200:
        return _fail(args, status, data)
    lines = [f"example {data['example']}: {'PASS' if data['passed'] else 'FAIL'}"]
    for check in data["checks"]:
        mark = "ok " if check["ok"] else "BAD"
        lines.append(f"  [{mark}] {check['name']}")
        if not check["ok"]:
            lines.append(f"        expected {check['expected']}")
            lines.append(f"        actual   {check['actual']}")
    _emit(args, data, lines)
    return EXIT_OK if data["passed"] else EXIT_REFUTED


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("koszulkit.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def _parse_multidegree(text: str):
    return [int(chunk) for chunk in text.split(",") if chunk.strip() != ""]


def _parse_monomial_text(text: str, n: int):
    from .grammar import parse_ideal, ParseError

    try:
        ideal = parse_ideal(f"n={n}; ({text})")
    except ParseError:
        return None
    if len(ideal.gens) != 1:
        return None
    return ideal.gens[0]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koszulkit",
        description="Koszul homology workbench for monomial and p-Borel ideals.",
    )
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in-process")
    parser.add_argument("--json", action="store_true",
                        help="print the raw JSON response")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse an ideal expression")
    p.add_argument("text")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("betti", help="graded Betti table, regularity, corners")
    p.add_argument("ideal")
    p.add_argument("--field", default="qq", help="qq or gf:<p>")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("homology", help="per-multidegree homology of one degree")
    p.add_argument("ideal")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("--field", default="qq")
    p.add_argument("--multidegree", default=None, help="comma list, e.g. 1,1,2,2")
    p.add_argument("--no-representatives", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cycles", help="minimal cycle lengths spanning homology")
    p.add_argument("ideal")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("--field", default="qq")
    p.add_argument("--max-length", type=int, default=4)
    p.add_argument("--multidegree", default=None)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("pborel", help="smallest p-Borel ideal of a monomial")
    p.add_argument("--monomial", required=True, help="e.g. x2*x4^2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_pborel)

    p = sub.add_parser("chain", help="saturation chain and corner candidates")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("verify", help="randomized verification suites")
    p.add_argument("suite", choices=["lemmas3", "2cyc", "main1", "main",
                                     "ah", "extremal", "lemma-h"])
    p.add_argument("--seed", default="0")
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", help="run a built-in worked example")
    p.add_argument("example", choices=["inter", "bi", "tri", "four",
                                       "five", "obstr", "ill"])
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("serve", help="run the compute service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
