"""File formats for evaluation: per-image box files, the dataset index,
and the TSV report.

Box files carry one box per line, ``class_id x_min y_min x_max y_max`` for
ground truth and the same plus a trailing confidence for predictions.  The
index is tab-separated: ``image_id<TAB>app<TAB>gt_file[<TAB>pred_file]``,
paths relative to the index file.  ``#`` starts a comment anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..model import BBox, Detection, class_by_id
from .metrics import EvalRecord, MapSummary


@dataclass(frozen=True, slots=True)
class IndexEntry:
    image_id: str
    app: str
    gt_path: Path
    pred_path: Path | None


def _data_lines(path: Path) -> list[tuple[int, str]]:
    lines = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        text = raw.split("#", 1)[0].strip()
        if text:
            lines.append((lineno, text))
    return lines


def read_boxes_file(path: str | Path) -> list[tuple[int, BBox, float | None]]:
    """Parse one image's boxes; confidence present marks a prediction line."""
    path = Path(path)
    out: list[tuple[int, BBox, float | None]] = []
    for lineno, text in _data_lines(path):
        fields = text.split()
        if len(fields) not in (5, 6):
            raise ValueError(f"{path}:{lineno}: expected 5 or 6 fields, got {len(fields)}")
        try:
            class_id = int(fields[0])
            coords = [float(v) for v in fields[1:5]]
            conf = float(fields[5]) if len(fields) == 6 else None
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
        out.append((class_id, BBox(*coords), conf))
    return out


def read_index(path: str | Path) -> list[IndexEntry]:
    path = Path(path)
    base = path.parent
    entries = []
    for lineno, text in _data_lines(path):
        fields = text.split("\t")
        if len(fields) not in (3, 4):
            raise ValueError(
                f"{path}:{lineno}: expected 3 or 4 tab-separated fields, got {len(fields)}"
            )
        image_id, app, gt_rel = (f.strip() for f in fields[:3])
        pred_rel = fields[3].strip() if len(fields) == 4 else ""
        entries.append(
            IndexEntry(
                image_id=image_id,
                app=app,
                gt_path=base / gt_rel,
                pred_path=base / pred_rel if pred_rel else None,
            )
        )
    return entries


def _record_from_entry(entry: IndexEntry) -> EvalRecord:
    gt = []
    for class_id, box, conf in read_boxes_file(entry.gt_path):
        if conf is not None:
            raise ValueError(
                f"{entry.gt_path}: ground truth line carries a confidence"
            )
        gt.append((class_by_id(class_id), box))
    preds = []
    if entry.pred_path is not None:
        for class_id, box, conf in read_boxes_file(entry.pred_path):
            if conf is None:
                raise ValueError(
                    f"{entry.pred_path}: prediction line missing confidence"
                )
            preds.append(
                Detection(cls=class_by_id(class_id), bbox=box, confidence=conf)
            )
    return EvalRecord(
        image_id=entry.image_id,
        ground_truth=tuple(gt),
        predictions=tuple(preds),
    )


def load_records(index_path: str | Path) -> list[EvalRecord]:
    return [_record_from_entry(entry) for entry in read_index(index_path)]


def records_from_dirs(gt_dir: str | Path, pred_dir: str | Path) -> list[EvalRecord]:
    """Pair ``<stem>.txt`` files across two directories by name.

    Every ground-truth file must exist; a missing prediction file means the
    model produced nothing for that image (legal, scores as misses).
    """
    gt_dir = Path(gt_dir)
    pred_dir = Path(pred_dir)
    gt_files = sorted(gt_dir.glob("*.txt"), key=lambda p: p.name)
    if not gt_files:
        raise ValueError(f"no .txt ground-truth files in {gt_dir}")
    records = []
    for gt_path in gt_files:
        pred_path: Path | None = pred_dir / gt_path.name
        if not pred_path.is_file():
            pred_path = None
        entry = IndexEntry(
            image_id=gt_path.stem, app="", gt_path=gt_path, pred_path=pred_path
        )
        records.append(_record_from_entry(entry))
    return records


def _cell(value: float | None) -> str:
    return "-" if value is None else f"{value:.4f}"


def format_report_tsv(summary: MapSummary) -> str:
    """Per-class table plus a Total row, tab-separated."""
    lines = [
        "# classes with no ground truth and no predictions are skipped from "
        "the mean (not zero-filled)",
        "class\tcategory\tAP50\tAP75\tAP\tnum_gt\tnum_pred",
    ]
    for row in summary.rows:
        lines.append(
            "\t".join(
                [
                    row.cls.name,
                    row.cls.category.value,
                    _cell(row.ap50),
                    _cell(row.ap75),
                    _cell(row.ap),
                    str(row.num_gt),
                    str(row.num_pred),
                ]
            )
        )
    total_gt = sum(r.num_gt for r in summary.rows)
    total_pred = sum(r.num_pred for r in summary.rows)
    lines.append(
        "\t".join(
            [
                "Total",
                "-",
                _cell(summary.map50),
                _cell(summary.map75),
                _cell(summary.map5095),
                str(total_gt),
                str(total_pred),
            ]
        )
    )
    return "\n".join(lines) + "\n"


def write_report_tsv(summary: MapSummary, path: str | Path) -> None:
    Path(path).write_text(format_report_tsv(summary), encoding="utf-8")


def write_boxes_file(
    path: str | Path,
    rows: Sequence[tuple[int, BBox, float | None]],
) -> None:
    lines = []
    for class_id, box, conf in rows:
        fields = [str(class_id)] + [f"{v:g}" for v in (box.x_min, box.y_min, box.x_max, box.y_max)]
        if conf is not None:
            fields.append(f"{conf:g}")
        lines.append(" ".join(fields))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
