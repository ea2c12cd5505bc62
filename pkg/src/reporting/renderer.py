import os
import json

import jinja2

from src.conditions.checker import ConditionReport
from src.construct.certificates import HamiltonCycleCert, KTreeCert, SmallVerdict, ViolationWitness
from src.harness.survey import SurveyReport

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), "templates")

_env = jinja2.Environment(
    loader=jinja2.FileSystemLoader(searchpath=TEMPLATE_DIR),
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def render(template_name: str, payload: dict) -> str:
    return _env.get_template(template_name).render(**payload)


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _occurrence_dict(occurrence):
    if occurrence is None:
        return None
    return {
        "subset": list(occurrence.subset),
        "pattern": occurrence.pattern.display_name,
        "nonadjacent_pairs": [list(p) for p in occurrence.nonadjacent_pairs],
    }


def condition_payload(report: ConditionReport) -> dict:
    return {
        "name": report.name,
        "satisfied": report.satisfied,
        "vacuous": report.vacuous,
        "threshold": report.threshold,
        "checked_pairs": report.checked_pairs,
        "precondition_failures": [p.value for p in report.precondition_failures],
        "violations": [
            {"pair": list(v.pair), "degree_sum": v.degree_sum, "occurrence": _occurrence_dict(v.occurrence)}
            for v in report.violations
        ],
    }


def witness_payload(witness: ViolationWitness) -> dict:
    return {
        "kind": witness.kind.value,
        "threshold": witness.threshold,
        "subset": list(witness.subset),
        "pattern": witness.pattern.display_name if witness.pattern else None,
        "pair": list(witness.pair) if witness.pair else None,
        "degree_sum": witness.degree_sum,
        "label": witness.label.value if witness.label else None,
    }


def hamilton_payload(result) -> dict:
    if isinstance(result, SmallVerdict):
        result = result.certificate if result.certificate is not None else None
    if isinstance(result, HamiltonCycleCert):
        return {"outcome": "cycle", "order": result.order, "sequence": list(result.sequence), "witness": None}
    if isinstance(result, ViolationWitness):
        return {"outcome": "witness", "order": None, "sequence": None, "witness": witness_payload(result)}
    return {"outcome": "none", "order": None, "sequence": None, "witness": None}


def tree_payload(result, k: int) -> dict:
    if isinstance(result, KTreeCert):
        return {
            "outcome": "tree",
            "k": k,
            "leaf_count": result.leaf_count,
            "edges": [list(e) for e in result.edges],
            "witness": None,
        }
    return {"outcome": "witness", "k": k, "leaf_count": None, "edges": None, "witness": witness_payload(result)}


def survey_payload(report: SurveyReport, out_path: str = None) -> dict:
    return {
        "rows": len(report.rows),
        "skipped": report.skipped,
        "ks": list(report.ks),
        "passed": report.passed,
        "counterexamples": [{"graph6": gid, "flags": flags} for gid, flags in report.counterexamples],
        "satisfied_counts": dict(report.satisfied_counts),
        "combination_counts": dict(sorted(report.combination_counts.items())),
        "thm1_not_ore": list(report.thm1_not_ore),
        "isomorphism_classes": report.isomorphism_classes,
        "elapsed_seconds": round(report.elapsed_seconds, 3),
        "csv": out_path,
    }
