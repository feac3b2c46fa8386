"""Hypothesis checklists and validation reports."""

from __future__ import annotations

from dataclasses import dataclass

from .correspondence import Verdict


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    items: tuple[tuple[str, Verdict], ...]

    @property
    def holds(self) -> bool:
        return all(v.holds for _, v in self.items)

    def failed(self) -> list[str]:
        return [label for label, v in self.items if not v.holds]

    def __getitem__(self, label: str) -> Verdict:
        for lab, v in self.items:
            if lab == label or lab.split(":", 1)[0] == label:
                return v
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "items": [{"label": label, **v.to_dict()} for label, v in self.items],
        }


@dataclass(frozen=True)
class ValidationReport:
    hypotheses: HypothesisReport
    conclusion: Verdict

    @property
    def hypotheses_hold(self) -> bool:
        return self.hypotheses.holds

    @property
    def sound(self) -> bool:
        return not (self.hypotheses_hold and not self.conclusion.holds)

    def to_dict(self) -> dict:
        return {
            "theorem": self.hypotheses.theorem,
            "hypotheses": self.hypotheses.to_dict()["items"],
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion": self.conclusion.to_dict(),
            "sound": self.sound,
        }
