"""
Syntax-directed conversion

Compares values without types, taking only the next fresh level. The only
eta rule is the one for functions. Equal top-level heads are first compared
by spine without unfolding; on failure both sides unfold and the comparison
is retried, so the verdict does not depend on that shortcut.
"""

from typing import Optional

from src.conv.base import ConvCxt, ConvError, ConvOptions, Conversion
from src.nbe.evaluator import apply_closure, unfold, v_app
from src.nbe.values import (
    SApp, SFst, SId, SSnd, Spine, TopHead, UnfoldCounter, Value, VLam,
    VNeutral, VPair, VPi, VSigma, VUnitType, VUnitVal, VUniv, is_top_neutral,
    spine_length, vvar,
)


class SyntacticConversion(Conversion):
    backend_name = "syntactic"

    def _conv_types(self, cxt: ConvCxt, expected: Value, actual: Value) -> None:
        self.unify(cxt.lvl, expected, actual)

    def unify(self, lvl: int, v: Value, w: Value) -> None:
        if isinstance(v, VNeutral) and isinstance(w, VNeutral):
            return self._unify_neutrals(lvl, v, w)

        # Function eta
        if isinstance(v, VLam):
            x = vvar(lvl)
            if isinstance(w, VLam):
                return self.unify(lvl + 1, apply_closure(v.closure, x), apply_closure(w.closure, x))
            if isinstance(w, VNeutral):
                return self.unify(lvl + 1, apply_closure(v.closure, x), v_app(w, x))
            raise ConvError(lvl, v, w, "function against non-function")
        if isinstance(w, VLam):
            x = vvar(lvl)
            if isinstance(v, VNeutral):
                return self.unify(lvl + 1, v_app(v, x), apply_closure(w.closure, x))
            raise ConvError(lvl, v, w, "non-function against function")

        if is_top_neutral(v):
            return self.unify(lvl, unfold(v, self.counter), w)
        if is_top_neutral(w):
            return self.unify(lvl, v, unfold(w, self.counter))

        match v, w:
            case VPi(_, dom, cod), VPi(_, dom2, cod2):
                self.unify(lvl, dom, dom2)
                x = vvar(lvl)
                return self.unify(lvl + 1, apply_closure(cod, x), apply_closure(cod2, x))
            case VSigma(_, first, second), VSigma(_, first2, second2):
                self.unify(lvl, first, first2)
                x = vvar(lvl)
                return self.unify(lvl + 1, apply_closure(second, x), apply_closure(second2, x))
            case VPair(a, b), VPair(a2, b2):
                self.unify(lvl, a, a2)
                return self.unify(lvl, b, b2)
            case (VUniv(), VUniv()) | (VUnitType(), VUnitType()) | (VUnitVal(), VUnitVal()):
                return
        raise ConvError(lvl, v, w, "rigid mismatch")

    def _unify_neutrals(self, lvl: int, v: VNeutral, w: VNeutral) -> None:
        hv, hw = v.head, w.head
        if hv == hw:
            if not isinstance(hv, TopHead):
                return self.unify_sp(lvl, v.spine, w.spine)
            if self.options.speculate:
                try:
                    if spine_length(v.spine) != spine_length(w.spine):
                        raise ConvError(lvl, None, None, "spine mismatch")
                    return self.unify_sp(lvl, v.spine, w.spine)
                except ConvError:
                    self.speculation_failures += 1
            return self.unify(lvl, unfold(v, self.counter), unfold(w, self.counter))

        top_v, top_w = isinstance(hv, TopHead), isinstance(hw, TopHead)
        if top_v and top_w:
            # Later definitions are built from earlier ones: unfold the later head first
            if hv.id.ordinal >= hw.id.ordinal:
                return self.unify(lvl, unfold(v, self.counter), w)
            return self.unify(lvl, v, unfold(w, self.counter))
        if top_v:
            return self.unify(lvl, unfold(v, self.counter), w)
        if top_w:
            return self.unify(lvl, v, unfold(w, self.counter))
        raise ConvError(lvl, v, w, "distinct variables")

    def unify_sp(self, lvl: int, sp: Spine, sp2: Spine) -> None:
        match sp, sp2:
            case SId(), SId():
                return
            case SApp(rest, a), SApp(rest2, b):
                self.unify_sp(lvl, rest, rest2)
                return self.unify(lvl, a, b)
            case (SFst(rest), SFst(rest2)) | (SSnd(rest), SSnd(rest2)):
                return self.unify_sp(lvl, rest, rest2)
        raise ConvError(lvl, None, None, "spine mismatch")


def unify(lvl: int, v: Value, w: Value, counter: Optional[UnfoldCounter] = None,
          options: ConvOptions = ConvOptions()) -> None:
    SyntacticConversion(counter, options).unify(lvl, v, w)


def unify_sp(lvl: int, sp: Spine, sp2: Spine, counter: Optional[UnfoldCounter] = None,
             options: ConvOptions = ConvOptions()) -> None:
    SyntacticConversion(counter, options).unify_sp(lvl, sp, sp2)
