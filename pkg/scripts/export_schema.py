#!/usr/bin/env python3
"""Export JSON schemas of the --json output models."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import orjson

from models import AxiomReport
from models.responses import (
    Compose2Response,
    Compose3Response,
    InvariantsResponse,
    PointResponse,
    ProjectiveResponse,
    SymbolResponse,
    ValueResponse,
)

SCHEMA_DIR = Path(__file__).parent.parent / "docs" / "schema"

MODELS = {
    "info": InvariantsResponse,
    "compose2": Compose2Response,
    "compose3": Compose3Response,
    "proj3": ProjectiveResponse,
    "conic_point": PointResponse,
    "conic_witness": SymbolResponse,
    "value": ValueResponse,
    "verify": AxiomReport,
}


def export_schemas(target: Path) -> int:
    """Write one <name>.schema.json per model into target."""
    target.mkdir(parents=True, exist_ok=True)
    for name, model in MODELS.items():
        path = target / f"{name}.schema.json"
        path.write_bytes(orjson.dumps(model.model_json_schema(), option=orjson.OPT_INDENT_2) + b"\n")
        print(f"   ✅ {path}")
    return len(MODELS)


if __name__ == "__main__":
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else SCHEMA_DIR
    print(f"📄 Exporting schemas to {out_dir}")
    count = export_schemas(out_dir)
    print(f"✅ {count} schemas written")
