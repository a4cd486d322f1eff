"""FastAPI application exposing the workbench as a stateless compute service.

Every endpoint is a pure request/response computation; nothing is cached or
stored between calls, so identical requests give identical responses and the
service can be shared by concurrent clients.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from ..errors import BoundExceeded, KoszulkitError
from ..grammar import ParseError, parse_ideal, render_ideal
from ..homology import (
    betti_table,
    candidate_multidegrees,
    chain_corner_candidates,
    strand_homology,
)
from ..ideals import (
    MonomialIdeal,
    borel_chain,
    is_p_borel,
    is_strongly_stable,
    principal_p_borel,
)
from ..linalg import parse_field
from ..cycles import min_length_report
from ..suites import SUITES, run_suite
from ..worked_examples import EXAMPLES, run_example
from . import schemas as sm


def _load_ideal(req: sm.IdealRequest) -> MonomialIdeal:
    if req.ideal_text is not None:
        return parse_ideal(req.ideal_text)
    if req.ideal is not None:
        return MonomialIdeal(req.ideal.n, [tuple(g) for g in req.ideal.gens])
    raise ParseError("request needs 'ideal_text' or 'ideal'", 0, 0)


def _ideal_json(ideal: MonomialIdeal) -> sm.IdealJSON:
    return sm.IdealJSON(**ideal.to_json())


def create_app() -> FastAPI:
    app = FastAPI(
        title="koszulkit",
        description="Exact Koszul homology of monomial and p-Borel ideals.",
        version="0.1.0",
    )

    @app.exception_handler(ParseError)
    async def _parse_error(request, exc: ParseError):
        return JSONResponse(
            status_code=422,
            content=sm.ErrorResponse(error=str(exc), kind="parse").model_dump(),
        )

    @app.exception_handler(BoundExceeded)
    async def _bound_error(request, exc: BoundExceeded):
        return JSONResponse(
            status_code=409,
            content=sm.ErrorResponse(error=str(exc), kind="bound-exceeded").model_dump(),
        )

    @app.exception_handler(KoszulkitError)
    async def _domain_error(request, exc: KoszulkitError):
        return JSONResponse(
            status_code=422,
            content=sm.ErrorResponse(error=str(exc), kind=type(exc).__name__).model_dump(),
        )

    @app.exception_handler(ValueError)
    async def _value_error(request, exc: ValueError):
        return JSONResponse(
            status_code=422,
            content=sm.ErrorResponse(error=str(exc), kind="value").model_dump(),
        )

    @app.get("/health", response_model=sm.HealthResponse)
    def health():
        return sm.HealthResponse(examples=sorted(EXAMPLES), suites=sorted(SUITES))

    @app.post("/v1/parse", response_model=sm.ParseResponse)
    def parse(req: sm.ParseRequest):
        ideal = parse_ideal(req.text)
        return sm.ParseResponse(ideal=_ideal_json(ideal), canonical=render_ideal(ideal))

    @app.post("/v1/betti", response_model=sm.BettiResponse)
    def betti(req: sm.BettiRequest):
        ideal = _load_ideal(req)
        fld = parse_field(req.field)
        table = betti_table(ideal, fld)
        corners = [
            sm.CornerEntry(t=t, r=r, dim=dim)
            for (t, r), dim in sorted(table.corner_values().items())
        ]
        return sm.BettiResponse(
            field=table.field_name,
            entries=[sm.BettiEntry(i=i, j=j, dim=v)
                     for (i, j), v in sorted(table.entries.items())],
            regularity=table.regularity(),
            ideal_regularity=table.ideal_regularity(),
            corners=corners,
            diagram=table.render(),
        )

    @app.post("/v1/homology", response_model=sm.HomologyResponse)
    def homology(req: sm.HomologyRequest):
        ideal = _load_ideal(req)
        fld = parse_field(req.field)
        degrees = (
            [tuple(req.multidegree)]
            if req.multidegree is not None
            else candidate_multidegrees(ideal, req.i)
        )
        strands = []
        total = 0
        for a in degrees:
            sh = strand_homology(ideal, req.i, a, fld)
            if sh.betti == 0 and req.multidegree is None:
                continue
            total += sh.betti
            reps = (
                [sm.ChainJSON(**chain.to_json()) for chain in sh.representatives]
                if req.representatives
                else []
            )
            strands.append(
                sm.StrandReport(
                    multidegree=list(a),
                    strand_dim=len(sh.basis),
                    cycles=len(sh.cycle_vectors),
                    boundaries=len(sh.boundary_vectors),
                    betti=sh.betti,
                    representatives=reps,
                )
            )
        return sm.HomologyResponse(field=fld.name, i=req.i, total=total, strands=strands)

    @app.post("/v1/cycles", response_model=sm.CyclesResponse)
    def cycles(req: sm.CyclesRequest):
        ideal = _load_ideal(req)
        fld = parse_field(req.field)
        degrees = (
            [tuple(req.multidegree)]
            if req.multidegree is not None
            else candidate_multidegrees(ideal, req.i)
        )
        strands = []
        exceeded = False
        for a in degrees:
            report = min_length_report(ideal, req.i, a, fld, k_max=req.max_length)
            if report.status == "bound-exceeded":
                exceeded = True
            if report.status == "ok" and report.betti == 0 and req.multidegree is None:
                continue
            strands.append(
                sm.CycleStrandReport(
                    multidegree=list(a),
                    status=report.status,
                    strand_dim=report.strand_dim,
                    betti=report.betti,
                    spanning_length=report.spanning_length,
                    note=report.note,
                )
            )
        return sm.CyclesResponse(
            field=fld.name, i=req.i, bound_exceeded=exceeded, strands=strands
        )

    @app.post("/v1/pborel", response_model=sm.PBorelResponse)
    def pborel(req: sm.PBorelRequest):
        u = tuple(int(e) for e in req.monomial)
        fact = principal_p_borel(u, req.p)
        ideal = fact.expand()
        return sm.PBorelResponse(
            p=req.p,
            alpha=[list(r) for r in fact.alpha],
            ideal=_ideal_json(ideal),
            canonical=render_ideal(ideal),
            generator_count=len(ideal.gens),
            is_p_borel=is_p_borel(ideal, req.p),
            is_strongly_stable=is_strongly_stable(ideal),
        )

    @app.post("/v1/chain", response_model=sm.ChainResponse)
    def chain(req: sm.IdealRequest):
        ideal = _load_ideal(req)
        stages = borel_chain(ideal)
        return sm.ChainResponse(
            stages=[
                sm.ChainStageJSON(
                    index=st.index,
                    n_stage=st.n_stage,
                    top_socle_degree=st.top_socle_degree,
                    corner_dimension=st.corner_dimension,
                    restricted=_ideal_json(st.restricted),
                    saturated=_ideal_json(st.saturated),
                )
                for st in stages
            ],
            corner_candidates=[
                sm.CornerEntry(t=t, r=r, dim=dim)
                for t, r, dim in sorted(chain_corner_candidates(ideal))
            ],
        )

    @app.post("/v1/verify", response_model=sm.VerifyResponse)
    def verify(req: sm.VerifyRequest):
        result = run_suite(req.suite, seed=req.seed, trials=req.trials)
        return sm.VerifyResponse(**result.to_json())

    @app.post("/v1/reproduce", response_model=sm.ReproduceResponse)
    def reproduce(req: sm.ReproduceRequest):
        report = run_example(req.example)
        data = report.to_json()
        return sm.ReproduceResponse(
            example=data["example"],
            passed=data["passed"],
            checks=[sm.CheckJSON(**c) for c in data["checks"]],
        )

    return app


app = create_app()
