"""HTTP service wrapping the classification pipeline.

Stateless request/response endpoints over the same core the CLI uses:
submit a triangulation in tape format, get violations, invariants, the
double cover, auxiliary graphs, or a homeomorphism verdict back.  Run
with ``surfclass serve`` or any ASGI server pointed at ``app``.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .classify import classify, extract_component, homeomorphic, normal_form_name
from .engine import make_engine
from .errors import BudgetExceeded, InvalidSurface, SurfclassError, UnsupportedSpec
from .generate import FamilySpec, Relabel, Subdivide, closed_form_triples, generate
from .graphs import boundary_identification_graph, double_cover, face_dual, \
    vertex_identification_graph
from .invariants import invariant_triple
from .triangulation import input_symbol_count, parse, serialize

app = FastAPI(title="surfclass", version=__version__,
              description="Classification of triangulated compact surfaces")


class EngineOptions(BaseModel):
    tape: str = Field(..., description="Triangulation in tape format")
    engine: Literal["baseline", "metered"] = "baseline"
    oracle: Optional[Literal["unionfind", "savitch", "derand"]] = None
    budget_bits: Optional[int] = Field(None, description="Override the metered bit budget")


class SpaceReport(BaseModel):
    input_symbols: int
    budget_bits: int
    peak_bits: int
    input_reads: int


class ViolationOut(BaseModel):
    kind: str
    triangle: int
    edge: int
    detail: str


class CheckResponse(BaseModel):
    ok: bool
    violations: List[ViolationOut]


class ComponentOut(BaseModel):
    o: int
    chi: int
    b: int
    name: str


class ClassifyResponse(BaseModel):
    components: List[ComponentOut]
    space: Optional[SpaceReport] = None


class HomeomorphicRequest(BaseModel):
    tape1: str
    tape2: str
    engine: Literal["baseline", "metered"] = "baseline"
    oracle: Optional[Literal["unionfind", "savitch", "derand"]] = None
    budget_bits: Optional[int] = None


class HomeomorphicResponse(BaseModel):
    homeomorphic: bool
    first: List[ComponentOut]
    second: List[ComponentOut]


class TapeResponse(BaseModel):
    tape: str


class GraphRequest(BaseModel):
    tape: str
    kind: Literal["dual", "K", "Kprime"] = "dual"


class GraphResponse(BaseModel):
    vertex_count: int
    edges: List[List[int]]


class GenerateRequest(BaseModel):
    family: Literal["sphere", "orientable", "nonorientable", "disk",
                    "moebius", "union"] = "sphere"
    genus: int = 0
    punctures: int = 0
    components: List["GenerateRequest"] = []
    relabel_seed: Optional[int] = None
    subdivide: int = 0
    subdivide_seed: int = 0


class GenerateResponse(BaseModel):
    tape: str
    expected: List[ComponentOut]


def _parse_tape(tape: str):
    try:
        return parse(tape)
    except SurfclassError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _engine(req, tri=None, input_symbols=None):
    try:
        return make_engine(engine=req.engine, oracle=req.oracle, tri=tri,
                           input_symbols=input_symbols,
                           budget_bits=req.budget_bits)
    except (ValueError, NotImplementedError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _component_out(triple) -> ComponentOut:
    return ComponentOut(o=triple.o, chi=triple.chi, b=triple.b,
                        name=normal_form_name(triple).text)


@app.get("/")
def health():
    return {"service": "surfclass", "version": __version__}


@app.post("/check", response_model=CheckResponse)
def check_endpoint(req: EngineOptions):
    tri = _parse_tape(req.tape)
    engine = _engine(req, tri)
    violations = engine.check(tri)
    return CheckResponse(ok=not violations, violations=[
        ViolationOut(kind=v.kind, triangle=v.triangle, edge=v.column, detail=v.detail)
        for v in violations])


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: EngineOptions):
    tri = _parse_tape(req.tape)
    engine = _engine(req, tri)
    try:
        triples = classify(tri, engine)
    except InvalidSurface as exc:
        raise HTTPException(status_code=422, detail={
            "message": str(exc),
            "violations": [str(v) for v in exc.violations]})
    except BudgetExceeded as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    space = SpaceReport(**engine.workspace.space_report()) \
        if engine.workspace is not None else None
    return ClassifyResponse(components=[_component_out(t) for t in triples],
                            space=space)


@app.post("/invariants", response_model=ClassifyResponse)
def invariants_endpoint(req: EngineOptions):
    tri = _parse_tape(req.tape)
    engine = _engine(req, tri)
    violations = engine.check(tri)
    if violations:
        raise HTTPException(status_code=422, detail={
            "message": "input is not a surface",
            "violations": [str(v) for v in violations]})
    components = []
    if tri.n:
        count = engine.count_components(engine.dual_graph(tri))
        for i in range(1, count + 1):
            part = tri if count == 1 else extract_component(tri, i, engine)
            components.append(_component_out(invariant_triple(part, engine)))
    space = SpaceReport(**engine.workspace.space_report()) \
        if engine.workspace is not None else None
    return ClassifyResponse(components=components, space=space)


@app.post("/homeomorphic", response_model=HomeomorphicResponse)
def homeomorphic_endpoint(req: HomeomorphicRequest):
    tri1 = _parse_tape(req.tape1)
    tri2 = _parse_tape(req.tape2)
    symbols = input_symbol_count(tri1) + input_symbol_count(tri2)
    engine = _engine(req, tri1, input_symbols=symbols)
    try:
        verdict = homeomorphic(tri1, tri2, engine)
        first = classify(tri1, engine)
        second = classify(tri2, engine)
    except InvalidSurface as exc:
        raise HTTPException(status_code=422, detail={
            "message": str(exc),
            "violations": [str(v) for v in exc.violations]})
    return HomeomorphicResponse(
        homeomorphic=verdict,
        first=[_component_out(t) for t in first],
        second=[_component_out(t) for t in second])


@app.post("/double-cover", response_model=TapeResponse)
def double_cover_endpoint(req: EngineOptions):
    tri = _parse_tape(req.tape)
    return TapeResponse(tape=serialize(double_cover(tri)))


@app.post("/graph", response_model=GraphResponse)
def graph_endpoint(req: GraphRequest):
    tri = _parse_tape(req.tape)
    builder = {"dual": face_dual, "K": vertex_identification_graph,
               "Kprime": boundary_identification_graph}[req.kind]
    graph = builder(tri)
    return GraphResponse(vertex_count=graph.num_vertices,
                         edges=[[a, b] for a, b in graph.sorted_edges()])


def _spec_from_request(req: GenerateRequest) -> FamilySpec:
    mutations = []
    if req.subdivide:
        mutations.append(Subdivide(count=req.subdivide, seed=req.subdivide_seed))
    if req.relabel_seed is not None:
        mutations.append(Relabel(seed=req.relabel_seed))
    return FamilySpec(
        family=req.family, genus=req.genus, punctures=req.punctures,
        components=tuple(_spec_from_request(part) for part in req.components),
        mutations=tuple(mutations))


@app.post("/generate", response_model=GenerateResponse)
def generate_endpoint(req: GenerateRequest):
    spec = _spec_from_request(req)
    try:
        tri = generate(spec)
        expected = closed_form_triples(spec)
    except UnsupportedSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return GenerateResponse(tape=serialize(tri),
                            expected=[_component_out(t) for t in expected])
