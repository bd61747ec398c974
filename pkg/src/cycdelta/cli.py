"""Command-line client for the census service.

Runs against an in-process app by default; --server points it at a
running instance instead.  Exit codes: 0 clean, 1 violations, 2 bad input.
"""
from __future__ import annotations

import argparse
import sys


def _open_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # the in-process client is an implementation detail; keep its
        # import-time deprecation chatter off the CLI's stderr
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _detail(resp) -> str:
    try:
        return str(resp.json().get("detail"))
    except Exception:
        return resp.text


def _read_catalog_arg(path: str | None) -> str | None:
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"cannot read catalog: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _request(client, method: str, path: str, **kwargs):
    import httpx

    try:
        resp = client.request(method, path, **kwargs)
    except httpx.HTTPError as exc:
        print(f"request failed: {exc}", file=sys.stderr)
        raise SystemExit(2)
    if resp.status_code != 200:
        print(_detail(resp), file=sys.stderr)
        raise SystemExit(2)
    return resp.json()


def _cmd_census(args) -> int:
    body = {
        "catalog_text": _read_catalog_arg(args.catalog),
        "delta_max": args.delta_max,
        "format": args.format,
    }
    with _open_client(args.server) as client:
        data = _request(client, "POST", "/census", json=body)
    report = data["report"]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)
    return 0


def _cmd_delta(args) -> int:
    with _open_client(args.server) as client:
        data = _request(client, "POST", "/delta", json={"group": args.group})
    for key in ("name", "order", "cyclic_count", "delta", "i2", "bound_ok",
                "equality_case"):
        value = data[key]
        if isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}: {value}")
    return 0


def _cmd_verify(args) -> int:
    body = {"catalog_text": _read_catalog_arg(args.catalog)}
    with _open_client(args.server) as client:
        data = _request(client, "POST", "/verify", json=body)
    any_violation = False
    for check in ("bound", "miller", "star"):
        for violation in data[check]:
            any_violation = True
            print(f"{check}: {violation}")
    if not any_violation:
        print("ok")
        return 0
    return 1


def _cmd_catalog_validate(args) -> int:
    body = {"catalog_text": _read_catalog_arg(args.file)}
    with _open_client(args.server) as client:
        data = _request(client, "POST", "/catalog/validate", json=body)
    for diagnostic in data["diagnostics"]:
        print(diagnostic)
    if data["diagnostics"]:
        return 1
    print("ok")
    return 0


def _cmd_oracle_enumerate(args) -> int:
    with _open_client(args.server) as client:
        data = _request(client, "GET", f"/oracle/{args.order}")
    noun = "class" if data["count"] == 1 else "classes"
    print(f"order {data['order']}: {data['count']} {noun}")
    for i, cls in enumerate(data["classes"], start=1):
        census = " ".join(
            f"{d}:{cls['census'][d]}"
            for d in sorted(cls["census"], key=int)
        )
        print(f"class {i}: delta {cls['delta']}, orders {census}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycdelta",
        description="Census of the gap between group order and cyclic subgroup count.",
    )
    parser.add_argument(
        "--server", default=None, metavar="URL",
        help="base URL of a running service (default: in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser("census", help="bucket catalog entries by deficiency")
    census.add_argument("--catalog", metavar="FILE", default=None,
                        help="catalog file (default: bundled)")
    census.add_argument("--delta-max", type=int, required=True, metavar="N")
    census.add_argument("--format", choices=("text", "structured"), default="text")
    census.add_argument("--out", metavar="FILE", default=None)
    census.set_defaults(func=_cmd_census)

    delta = sub.add_parser("delta", help="deficiency report for one group")
    delta.add_argument("--group", required=True, metavar="EXPR",
                       help="expression such as D8, C3xC3, C5:C4@2")
    delta.set_defaults(func=_cmd_delta)

    verify = sub.add_parser("verify", help="check the bound, Miller, and counting identities")
    verify.add_argument("--catalog", metavar="FILE", default=None,
                        help="catalog file (default: bundled)")
    verify.set_defaults(func=_cmd_verify)

    catalog = sub.add_parser("catalog", help="catalog file operations")
    catalog_sub = catalog.add_subparsers(dest="subcommand", required=True)
    validate = catalog_sub.add_parser("validate", help="parse and cross-check a catalog")
    validate.add_argument("file", metavar="FILE")
    validate.set_defaults(func=_cmd_catalog_validate)

    oracle = sub.add_parser("oracle", help="exhaustive small-order enumeration")
    oracle_sub = oracle.add_subparsers(dest="subcommand", required=True)
    enumerate_p = oracle_sub.add_parser("enumerate", help="list classes of one order")
    enumerate_p.add_argument("order", type=int)
    enumerate_p.set_defaults(func=_cmd_oracle_enumerate)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
