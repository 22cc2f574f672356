"""Detection metrics: IoU, greedy matching, 101-point AP, per-class mAP.

AP follows the COCO convention (monotone precision envelope sampled at the
101 recall points 0.00, 0.01, ..., 1.00), since that is what the common
detection tooling reports.  Classes absent from both ground truth and
predictions are skipped from the mean rather than zero-filled; summary
output flags this policy so numbers can be compared against tools that
choose differently.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..model import BBox, Detection, ObjectClass, taxonomy

RECALL_POINTS: tuple[float, ...] = tuple(i / 100.0 for i in range(101))
IOU_THRESHOLDS: tuple[float, ...] = tuple(t / 100.0 for t in range(50, 100, 5))


def iou(a: BBox, b: BBox) -> float:
    """Intersection area over union area; 0 when the union is empty."""
    inter_w = min(a.x_max, b.x_max) - max(a.x_min, b.x_min)
    inter_h = min(a.y_max, b.y_max) - max(a.y_min, b.y_min)
    if inter_w <= 0.0 or inter_h <= 0.0:
        inter = 0.0
    else:
        inter = inter_w * inter_h
    union = a.area + b.area - inter
    if union <= 0.0:
        return 0.0
    return inter / union


def match_detections(
    preds: Sequence[Detection],
    gts: Sequence[BBox],
    iou_thresh: float,
) -> tuple[list[bool], list[bool]]:
    """Greedy matching for one image and one class.

    Predictions are taken in confidence-descending order (stable on ties);
    each claims the unmatched ground truth with the highest IoU if that IoU
    reaches the threshold.  Returns per-prediction TP flags in that order
    and per-ground-truth matched flags.
    """
    order = sorted(range(len(preds)), key=lambda i: -preds[i].confidence)
    matched = [False] * len(gts)
    flags: list[bool] = []
    for i in order:
        box = preds[i].bbox
        best_iou = 0.0
        best_j = -1
        for j, gt in enumerate(gts):
            if matched[j]:
                continue
            overlap = iou(box, gt)
            if overlap > best_iou:
                best_iou = overlap
                best_j = j
        if best_j >= 0 and best_iou >= iou_thresh:
            matched[best_j] = True
            flags.append(True)
        else:
            flags.append(False)
    return flags, matched


def average_precision(flags: Sequence[bool], num_gt: int) -> float | None:
    """101-point interpolated AP from confidence-ordered TP/FP flags.

    ``None`` means undefined (no ground truth and no predictions); with
    ground truth absent but predictions present the AP is 0.
    """
    if num_gt == 0:
        return None if len(flags) == 0 else 0.0
    if len(flags) == 0:
        return 0.0
    recall: list[float] = []
    precision: list[float] = []
    tp = 0
    for i, flag in enumerate(flags):
        if flag:
            tp += 1
        recall.append(tp / num_gt)
        precision.append(tp / (i + 1))
    for i in range(len(precision) - 2, -1, -1):
        if precision[i + 1] > precision[i]:
            precision[i] = precision[i + 1]
    total = 0.0
    for r in RECALL_POINTS:
        idx = bisect_left(recall, r)
        total += precision[idx] if idx < len(precision) else 0.0
    return total / 101.0


@dataclass(frozen=True, slots=True)
class EvalRecord:
    """Ground truth and predictions for one image."""

    image_id: str
    ground_truth: tuple[tuple[ObjectClass, BBox], ...]
    predictions: tuple[Detection, ...]


def _pooled_flags(
    records: Sequence[EvalRecord], cls: ObjectClass, iou_thresh: float
) -> tuple[list[bool], int]:
    """Match per image, then pool flags across images in global confidence
    order (ties broken by record position, then per-image rank)."""
    pooled: list[tuple[float, int, int, bool]] = []
    num_gt = 0
    for rec_idx, rec in enumerate(records):
        gts = [box for c, box in rec.ground_truth if c.id == cls.id]
        preds = [d for d in rec.predictions if d.cls.id == cls.id]
        num_gt += len(gts)
        flags, _ = match_detections(preds, gts, iou_thresh)
        order = sorted(range(len(preds)), key=lambda i: -preds[i].confidence)
        for rank, i in enumerate(order):
            pooled.append((preds[i].confidence, rec_idx, rank, flags[rank]))
    pooled.sort(key=lambda item: (-item[0], item[1], item[2]))
    return [item[3] for item in pooled], num_gt


@dataclass(frozen=True, slots=True)
class ClassAP:
    cls: ObjectClass
    ap50: float | None
    ap75: float | None
    ap: float | None
    num_gt: int
    num_pred: int

    @property
    def skipped(self) -> bool:
        return self.ap is None


@dataclass(frozen=True, slots=True)
class MapSummary:
    rows: tuple[ClassAP, ...]
    map50: float | None
    map75: float | None
    map5095: float | None

    @property
    def skipped_classes(self) -> tuple[str, ...]:
        return tuple(r.cls.name for r in self.rows if r.skipped)


def _mean(values: Iterable[float]) -> float | None:
    items = list(values)
    if not items:
        return None
    return sum(items) / len(items)


def map_summary(
    records: Sequence[EvalRecord],
    classes: Sequence[ObjectClass] | None = None,
) -> MapSummary:
    if classes is None:
        classes = taxonomy()
    rows: list[ClassAP] = []
    for cls in classes:
        per_thresh: Mapping[float, float | None] = {
            t: average_precision(*_pooled_flags(records, cls, t))
            for t in IOU_THRESHOLDS
        }
        num_gt = sum(
            1 for rec in records for c, _ in rec.ground_truth if c.id == cls.id
        )
        num_pred = sum(
            1 for rec in records for d in rec.predictions if d.cls.id == cls.id
        )
        values = [per_thresh[t] for t in IOU_THRESHOLDS]
        if all(v is None for v in values):
            rows.append(ClassAP(cls, None, None, None, num_gt, num_pred))
            continue
        defined = [v for v in values if v is not None]
        # A class is either defined at every threshold or at none: the
        # gt/pred presence that decides definedness does not vary with the
        # IoU threshold.
        assert len(defined) == len(values)
        rows.append(
            ClassAP(
                cls=cls,
                ap50=per_thresh[IOU_THRESHOLDS[0]],
                ap75=per_thresh[IOU_THRESHOLDS[5]],
                ap=sum(defined) / len(defined),
                num_gt=num_gt,
                num_pred=num_pred,
            )
        )
    scored = [r for r in rows if not r.skipped]
    return MapSummary(
        rows=tuple(rows),
        map50=_mean(r.ap50 for r in scored if r.ap50 is not None),
        map75=_mean(r.ap75 for r in scored if r.ap75 is not None),
        map5095=_mean(r.ap for r in scored if r.ap is not None),
    )
