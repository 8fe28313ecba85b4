#!/usr/bin/env python
"""
Example script demonstrating the ZAMO Knowledge Graph Toolkit.

This script shows how to:
1. Check the shipped vocabularies for pitfalls
2. Validate the SKOS alignments
3. Query a saturated dataset
4. Replay a SAMOD regression
"""

from pathlib import Path

from src.config import Config
from src.main import ZamoToolkit
from src.models.enums import ReportFormat
from src.samod.report import render_report
from src.utils.logger import setup_logger


def main():
    """Run example workflow."""

    setup_logger(level="WARNING")

    print("=" * 60)
    print("ZAMO Knowledge Graph Toolkit - Example Run")
    print("=" * 60)

    config = Config.from_yaml(Path("config/config.yaml"))
    toolkit = ZamoToolkit(config)
    agents = config.fixtures_path / "agents"

    if not (agents / "manifest.json").exists():
        print(f"\n⚠️  No agents suite found under {agents}")
        return

    print("\n[1/4] Scanning the shipped vocabularies...")
    diagnostics, pitfalls = toolkit.pitfalls()
    errors = [p for p in pitfalls if p.is_error]
    print(f"✓ {len(diagnostics)} schema diagnostics, {len(pitfalls)} pitfalls ({len(errors)} errors)")

    print("\n[2/4] Validating the alignments...")
    diagnostics, violations = toolkit.align_validate()
    print(f"✓ {len(violations)} alignment violations")

    print("\n[3/4] Who is the managing director of Antichità?")
    iteration = agents / "iteration-1"
    table = toolkit.query(iteration / "dataset.ttl", iteration / "q1.rq", reason=True)
    print(table.to_text())

    print("[4/4] Regression over the agents suite...")
    report = toolkit.samod(agents / "manifest.json", regression=True)
    print(render_report(report, ReportFormat.TEXT))

    print("=" * 60)
    status = "reached" if report.milestone else "not reached"
    print(f"Milestone {status}: {report.cq_passed}/{report.cq_total} competency questions")
    print("=" * 60)
    print("\nNext steps:")
    print("1. Run: zamo samod run fixtures/events/manifest.json --regression")
    print("2. Export an alignment: zamo align export events")
    print("")


if __name__ == "__main__":
    main()
