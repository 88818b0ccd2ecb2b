"""Formula catalog and coverage audit.

``formula_catalog.json`` maps every catalogued closed form and operation
to the callable implementing it and the test(s) exercising it.  The audit
fails when an entry's callable cannot be imported, when a listed test
does not exist, or when an identifier from the out-of-scope list sneaks
into the table.
"""

from __future__ import annotations

import importlib
import importlib.resources
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

#: Topics deliberately outside this package; their presence in the
#: catalog is an audit failure.
OUT_OF_SCOPE = frozenset({
    "multi-soliton-transformations",
    "double-sine-gordon",
    "hyperelliptic-extensions",
    "sine-gordon-implicit-complex",
    "inverse-scattering",
    "blow-up-analysis",
    "tanh-expansion-methods",
})


@dataclass
class CoverageReport:
    entries: int = 0
    missing_impl: list[str] = field(default_factory=list)
    missing_test: list[str] = field(default_factory=list)
    forbidden: list[str] = field(default_factory=list)
    malformed: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing_impl or self.missing_test
                    or self.forbidden or self.malformed)

    def gaps(self) -> list[str]:
        out = []
        out += [f"missing implementation: {x}" for x in self.missing_impl]
        out += [f"missing test: {x}" for x in self.missing_test]
        out += [f"out-of-scope entry: {x}" for x in self.forbidden]
        out += [f"malformed entry: {x}" for x in self.malformed]
        return out


def load_catalog() -> list[dict]:
    text = (importlib.resources.files("expwave") / "formula_catalog.json").read_text()
    return json.loads(text)


def _resolve(target: str) -> bool:
    mod_name, _, attr = target.partition(":")
    try:
        mod = importlib.import_module(mod_name)
    except ImportError:
        return False
    obj = mod
    for part in attr.split(".") if attr else []:
        if not hasattr(obj, part):
            return False
        obj = getattr(obj, part)
    return True


def _test_exists(test_id: str, tests_root: Path) -> bool:
    # test ids look like "test_solutions.py::test_dark_soliton_background"
    fname, _, func = test_id.partition("::")
    path = tests_root / fname
    if not path.is_file():
        return False
    if not func:
        return True
    pattern = re.compile(rf"^\s*def {re.escape(func)}\s*\(", re.MULTILINE)
    return bool(pattern.search(path.read_text()))


def coverage_audit(catalog: list[dict] | None = None,
                   tests_root: str | Path | None = None) -> CoverageReport:
    """Check the catalog: every entry resolves to a callable and to at
    least one existing test; no out-of-scope identifier appears."""
    if catalog is None:
        catalog = load_catalog()
    report = CoverageReport(entries=len(catalog))
    seen = set()
    for entry in catalog:
        ident = entry.get("id")
        if not ident or "implemented_by" not in entry or "tests" not in entry:
            report.malformed.append(str(ident or entry))
            continue
        if ident in seen:
            report.malformed.append(f"{ident} (duplicate)")
            continue
        seen.add(ident)
        if ident in OUT_OF_SCOPE:
            report.forbidden.append(ident)
            continue
        if not _resolve(entry["implemented_by"]):
            report.missing_impl.append(f"{ident} -> {entry['implemented_by']}")
        tests = entry["tests"]
        if not tests:
            report.missing_test.append(ident)
        elif tests_root is not None:
            root = Path(tests_root)
            for tid in tests:
                if not _test_exists(tid, root):
                    report.missing_test.append(f"{ident} -> {tid}")
    return report
