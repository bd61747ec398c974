"""HTTP facade: the census library behind a small JSON API."""
from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .catalog import CatalogError, bundled_desk_catalog, parse_catalog, validate_catalog
from .census import emit_report, run_census, verify_bound, verify_miller, verify_star
from .constructors import SpecSyntaxError, parse_group_expr
from .group import GroupError, delta_report
from .oracle import ORACLE_MAX_ORDER, enumerate_order

app = FastAPI(title="cycdelta", version=__version__)


class CensusRequest(BaseModel):
    catalog_text: str | None = None  # omitted -> bundled desk catalog
    delta_max: int = Field(ge=1, le=128)
    format: Literal["text", "structured"] = "text"


class CensusResponse(BaseModel):
    report: str


class DeltaRequest(BaseModel):
    group: str


class DeltaResponse(BaseModel):
    name: str
    order: int
    cyclic_count: int
    delta: int
    i2: int
    bound_ok: bool
    equality_case: bool


class CatalogRequest(BaseModel):
    catalog_text: str | None = None


class VerifyResponse(BaseModel):
    bound: list[str]
    miller: list[str]
    star: list[str]
    clean: bool


class ValidateResponse(BaseModel):
    diagnostics: list[str]


class OracleClass(BaseModel):
    delta: int
    census: dict[int, int]


class OracleResponse(BaseModel):
    order: int
    count: int
    classes: list[OracleClass]


def _load_catalog(text: str | None):
    if text is None:
        return bundled_desk_catalog()
    try:
        return parse_catalog(text)
    except CatalogError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/census", response_model=CensusResponse)
def census_endpoint(req: CensusRequest) -> CensusResponse:
    catalog = _load_catalog(req.catalog_text)
    try:
        result = run_census(catalog, req.delta_max)
    except (CatalogError, GroupError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return CensusResponse(report=emit_report(result, format=req.format))


@app.post("/delta", response_model=DeltaResponse)
def delta_endpoint(req: DeltaRequest) -> DeltaResponse:
    try:
        group = parse_group_expr(req.group)
    except (SpecSyntaxError, GroupError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    report = delta_report(group)
    return DeltaResponse(
        name=group.name or req.group,
        order=report.group_order,
        cyclic_count=report.cyclic_count,
        delta=report.delta,
        i2=report.i2,
        bound_ok=report.bound_ok,
        equality_case=report.equality_case,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: CatalogRequest) -> VerifyResponse:
    catalog = _load_catalog(req.catalog_text)
    try:
        delta_max = max((e.order for e in catalog.entries), default=1)
        result = run_census(catalog, delta_max)
        bound = verify_bound(result)
        miller = verify_miller(catalog)
        star = verify_star(catalog)
    except (CatalogError, GroupError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return VerifyResponse(
        bound=bound,
        miller=miller,
        star=star,
        clean=not (bound or miller or star),
    )


@app.post("/catalog/validate", response_model=ValidateResponse)
def validate_endpoint(req: CatalogRequest) -> ValidateResponse:
    catalog = _load_catalog(req.catalog_text)
    return ValidateResponse(diagnostics=validate_catalog(catalog))


@app.get("/oracle/{order}", response_model=OracleResponse)
def oracle_endpoint(order: int) -> OracleResponse:
    if not 1 <= order <= ORACLE_MAX_ORDER:
        raise HTTPException(
            status_code=400,
            detail=f"exhaustive enumeration is capped at order {ORACLE_MAX_ORDER}",
        )
    groups = enumerate_order(order)
    classes = []
    for group in groups:
        report = delta_report(group)
        orders = group.element_orders()
        census = {d: orders.count(d) for d in sorted(set(orders))}
        classes.append(OracleClass(delta=report.delta, census=census))
    return OracleResponse(order=order, count=len(groups), classes=classes)
