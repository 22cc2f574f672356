"""Detection evaluation, dataset split/augmentation tooling, benchmarks."""

from .bench import BenchReport, StageStats, kernel_bench, run_fixture_bench, summarize_stages
from .dataset import AugmentationDraw, AugmentationSpec, SplitPlan, augment, plan_splits, sample_draws
from .files import (
    format_report_tsv,
    load_records,
    read_boxes_file,
    read_index,
    records_from_dirs,
    write_report_tsv,
)
from .metrics import (
    IOU_THRESHOLDS,
    ClassAP,
    EvalRecord,
    MapSummary,
    average_precision,
    iou,
    map_summary,
    match_detections,
)

__all__ = [
    "AugmentationDraw",
    "AugmentationSpec",
    "BenchReport",
    "ClassAP",
    "EvalRecord",
    "IOU_THRESHOLDS",
    "MapSummary",
    "SplitPlan",
    "StageStats",
    "augment",
    "average_precision",
    "format_report_tsv",
    "iou",
    "kernel_bench",
    "load_records",
    "map_summary",
    "match_detections",
    "plan_splits",
    "read_boxes_file",
    "read_index",
    "records_from_dirs",
    "run_fixture_bench",
    "sample_draws",
    "summarize_stages",
    "write_report_tsv",
]
