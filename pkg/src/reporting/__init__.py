from src.reporting.renderer import (
    condition_payload,
    hamilton_payload,
    render,
    render_json,
    survey_payload,
    tree_payload,
    witness_payload,
)
