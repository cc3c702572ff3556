"""Regenerate every fixture file from first principles.

Each fixture is rebuilt programmatically (group tables, character sums,
generator matrices, closed-form series) and written with the canonical
serializer, so reruns are byte-stable and the manifest digests only move
when a fixture genuinely changes.  The split-product table and its gauge
come from scripts/derive_jf_table.py, which must run first.
"""

import hashlib
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cotwist import fixtures
from cotwist.lie_deform import afflie_presentation, exp_twist, jordanian_twist
from cotwist.serialize import (
    canonical_dumps,
    comodule_to_json,
    hopf_to_json,
    lie_to_json,
    matrix_to_json,
    rep_to_json,
    series_to_json,
    vector_to_json,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SERIES_ORDER = 4


def build_all():
    afflie = afflie_presentation()
    abelian = fixtures.abelian2_presentation()
    out = {
        "kZ2.json": hopf_to_json(fixtures.kz2()),
        "kK4.json": hopf_to_json(fixtures.kk4()),
        "kS3.json": hopf_to_json(fixtures.ks3()),
        "oZ2.json": hopf_to_json(fixtures.oz2()),
        "oK4.json": hopf_to_json(fixtures.ok4()),
        "oK4_cocycle.json": matrix_to_json(fixtures.ok4_cocycle()),
        "oZ2_sgn.json": vector_to_json(fixtures.oz2_sgn_character()),
        "oZ2_regular.json": comodule_to_json(fixtures.regular_comodule(fixtures.oz2())),
        "oK4_regular.json": comodule_to_json(fixtures.regular_comodule(fixtures.ok4())),
        "oZ2_sgn_comodule.json": comodule_to_json(
            fixtures.grouplike_comodule(fixtures.oz2(), fixtures.grouplikes_oz2()["sgn"])
        ),
        "afflie.json": lie_to_json(afflie),
        "abelian2.json": lie_to_json(abelian),
        "standard_r.json": matrix_to_json(fixtures.standard_r()),
        "jordanian.json": series_to_json(jordanian_twist(SERIES_ORDER, afflie)),
        "exp_nil.json": series_to_json(
            exp_twist(abelian, fixtures.standard_r(), SERIES_ORDER)
        ),
        "v2.json": rep_to_json(fixtures.rep_v2(afflie)),
        "v3.json": rep_to_json(fixtures.rep_v3(afflie)),
        "nil3.json": rep_to_json(fixtures.rep_nil3(abelian)),
        "diag2.json": rep_to_json(fixtures.rep_diag2(abelian)),
    }
    return out


def main():
    FIXTURES.mkdir(exist_ok=True)
    derived = ["jf_jordanian_table.json", "jf_jordanian_gauge.json"]
    for name in derived:
        if not (FIXTURES / name).exists():
            raise SystemExit(
                f"missing {name}: run scripts/derive_jf_table.py before this script"
            )
    built = build_all()
    for name, data in sorted(built.items()):
        (FIXTURES / name).write_text(canonical_dumps(data))
        print(f"wrote {name}")
    digests = {}
    for path in sorted(FIXTURES.glob("*.json")):
        if path.name == "manifest.json":
            continue
        digests[path.name] = hashlib.sha256(path.read_bytes()).hexdigest()
    manifest = {"kind": "manifest", "files": digests}
    (FIXTURES / "manifest.json").write_text(canonical_dumps(manifest))
    print(f"wrote manifest.json with {len(digests)} entries")


if __name__ == "__main__":
    main()
