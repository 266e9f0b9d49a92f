"""
Type-directed conversion

`unify_chk` compares two values at a known type and applies the eta rules for
functions, pairs and the unit type by inspecting that type. `unify_syn`
compares two neutrals and returns their common type, walking the spine with
the head's signature. Types are forced before each dispatch; values are
unfolded one step at a time, only where the comparison is stuck on a
top-level head.
"""

from typing import Optional, Tuple

from src.conv.base import ConvCxt, ConvError, ConvOptions, Conversion
from src.nbe.evaluator import apply_closure, force, unfold, v_app, v_fst, v_snd, v_spine
from src.nbe.values import (
    SApp, SFst, SId, SSnd, Spine, LocalHead, TopHead, UnfoldCounter, Value,
    VNeutral, VPair, VPi, VSigma, VUnitType, VUnitVal, VUniv, is_top_neutral,
    spine_length,
)
from src.utils.errors import InternalError

UNIV = VUniv()


class TypedConversion(Conversion):
    backend_name = "typed"

    def _conv_types(self, cxt: ConvCxt, expected: Value, actual: Value) -> None:
        self.unify_chk(cxt, expected, actual, UNIV)

    def unify_chk(self, cxt: ConvCxt, v: Value, w: Value, ty: Value) -> None:
        self._chk(cxt, v, w, force(ty, self.counter))

    def _chk(self, cxt: ConvCxt, v: Value, w: Value, ty: Value) -> None:
        # ty is already forced
        if isinstance(ty, VPi):
            x = cxt.fresh()
            return self.unify_chk(cxt.bind(ty.dom), v_app(v, x), v_app(w, x), apply_closure(ty.cod, x))
        if isinstance(ty, VUniv):
            return self._types(cxt, v, w)

        if self.options.sigma_unit_eta:
            if isinstance(ty, VUnitType):
                return
            if isinstance(ty, VSigma):
                first = v_fst(v)
                self.unify_chk(cxt, first, v_fst(w), ty.first)
                return self.unify_chk(cxt, v_snd(v), v_snd(w), apply_closure(ty.second, first))
        else:
            if isinstance(v, VUnitVal) and isinstance(w, VUnitVal):
                return
            if isinstance(ty, VSigma) and isinstance(v, VPair) and isinstance(w, VPair):
                self.unify_chk(cxt, v.first, w.first, ty.first)
                return self.unify_chk(cxt, v.second, w.second, apply_closure(ty.second, v.first))

        return self._stuck(cxt, v, w, ty)

    def _stuck(self, cxt: ConvCxt, v: Value, w: Value, ty: Value) -> None:
        """Values at a type without an eta rule: compare heads, unfolding as needed"""
        if isinstance(v, VNeutral) and isinstance(w, VNeutral):
            hv, hw = v.head, w.head
            if hv == hw:
                self.unify_syn(cxt, v, w)
                return
            top_v, top_w = isinstance(hv, TopHead), isinstance(hw, TopHead)
            if top_v and top_w:
                if hv.id.ordinal >= hw.id.ordinal:
                    return self._chk(cxt, unfold(v, self.counter), w, ty)
                return self._chk(cxt, v, unfold(w, self.counter), ty)
            if not (top_v or top_w):
                raise ConvError(cxt.lvl, v, w, "distinct variables", ty)
        if is_top_neutral(v):
            return self._chk(cxt, unfold(v, self.counter), w, ty)
        if is_top_neutral(w):
            return self._chk(cxt, v, unfold(w, self.counter), ty)
        raise ConvError(cxt.lvl, v, w, "rigid mismatch", ty)

    def _types(self, cxt: ConvCxt, a: Value, b: Value) -> None:
        match a, b:
            case (VUniv(), VUniv()) | (VUnitType(), VUnitType()):
                return
            case VPi(_, dom, cod), VPi(_, dom2, cod2):
                self._types(cxt, dom, dom2)
                x = cxt.fresh()
                return self._types(cxt.bind(dom), apply_closure(cod, x), apply_closure(cod2, x))
            case VSigma(_, first, second), VSigma(_, first2, second2):
                self._types(cxt, first, first2)
                x = cxt.fresh()
                return self._types(cxt.bind(first), apply_closure(second, x), apply_closure(second2, x))
        if isinstance(a, VNeutral) or isinstance(b, VNeutral):
            return self._stuck(cxt, a, b, UNIV)
        raise ConvError(cxt.lvl, a, b, "type constructor mismatch", UNIV)

    def unify_syn(self, cxt: ConvCxt, n: VNeutral, m: VNeutral) -> Value:
        """Compare two neutrals of a common type and return that type"""
        hn, hm = n.head, m.head
        if hn != hm:
            if not (isinstance(hn, TopHead) or isinstance(hm, TopHead)):
                raise ConvError(cxt.lvl, n, m, "distinct variables")
            ty = self.neutral_type(cxt, n)
            self.unify_chk(cxt, n, m, ty)
            return ty

        if isinstance(hn, LocalHead):
            return self.unify_sp(cxt, cxt.local_types[hn.lvl], n.spine, m.spine, VNeutral(hn))

        if self.options.speculate:
            try:
                if spine_length(n.spine) != spine_length(m.spine):
                    raise ConvError(cxt.lvl, None, None, "spine mismatch")
                return self.unify_sp(cxt, cxt.tops.type_of(hn.id), n.spine, m.spine,
                                     cxt.tops.glued(hn.id))
            except ConvError:
                self.speculation_failures += 1
        ty = self.neutral_type(cxt, n)
        self._chk(cxt, unfold(n, self.counter), unfold(m, self.counter), force(ty, self.counter))
        return ty

    def unify_sp(self, cxt: ConvCxt, head_ty: Value, sp: Spine, sp2: Spine,
                 head: Optional[Value] = None) -> Value:
        """Compare two spines off a common head and return the type of the result"""
        ty, _ = self._spine(cxt, head_ty, sp, sp2, head)
        return ty

    def _spine(self, cxt: ConvCxt, head_ty: Value, sp: Spine, sp2: Spine,
               head: Optional[Value]) -> Tuple[Value, Optional[Value]]:
        # Returns the type after the spine and the head applied to the spine so far
        match sp, sp2:
            case SId(), SId():
                return head_ty, head
            case SApp(rest, a), SApp(rest2, b):
                ty, prefix = self._spine(cxt, head_ty, rest, rest2, head)
                pi = _expect(force(ty, self.counter), VPi, "application")
                self.unify_chk(cxt, a, b, pi.dom)
                return apply_closure(pi.cod, a), (None if prefix is None else v_app(prefix, a))
            case SFst(rest), SFst(rest2):
                ty, prefix = self._spine(cxt, head_ty, rest, rest2, head)
                sigma = _expect(force(ty, self.counter), VSigma, "first projection")
                return sigma.first, (None if prefix is None else v_fst(prefix))
            case SSnd(rest), SSnd(rest2):
                ty, prefix = self._spine(cxt, head_ty, rest, rest2, head)
                sigma = _expect(force(ty, self.counter), VSigma, "second projection")
                if prefix is None:
                    raise InternalError("second projection in a spine compared without its head")
                return apply_closure(sigma.second, v_fst(prefix)), v_snd(prefix)
        raise ConvError(cxt.lvl, None, None, "spine mismatch")

    def neutral_type(self, cxt: ConvCxt, n: VNeutral) -> Value:
        return neutral_type(cxt, n, self.counter)


def _expect(ty: Value, kind: type, what: str):
    if not isinstance(ty, kind):
        raise InternalError(f"{what} at a non-{kind.__name__[1:]} type: {ty!r}")
    return ty


def neutral_type(cxt: ConvCxt, n: VNeutral, counter: Optional[UnfoldCounter] = None) -> Value:
    """Type of a neutral, from its head's type and its spine"""
    if counter is None:
        counter = UnfoldCounter()
    if isinstance(n.head, LocalHead):
        head_ty, head = cxt.local_types[n.head.lvl], VNeutral(n.head)
    else:
        head_ty, head = cxt.tops.type_of(n.head.id), cxt.tops.glued(n.head.id)

    def walk(sp: Spine) -> Value:
        match sp:
            case SId():
                return head_ty
            case SApp(rest, a):
                pi = _expect(force(walk(rest), counter), VPi, "application")
                return apply_closure(pi.cod, a)
            case SFst(rest):
                return _expect(force(walk(rest), counter), VSigma, "first projection").first
            case SSnd(rest):
                sigma = _expect(force(walk(rest), counter), VSigma, "second projection")
                return apply_closure(sigma.second, v_fst(v_spine(head, rest)))
        raise InternalError(f"not a spine: {sp!r}")

    return walk(n.spine)


def unify_chk(cxt: ConvCxt, v: Value, w: Value, ty: Value,
              counter: Optional[UnfoldCounter] = None, options: ConvOptions = ConvOptions()) -> None:
    TypedConversion(counter, options).unify_chk(cxt, v, w, ty)


def unify_syn(cxt: ConvCxt, n: VNeutral, m: VNeutral,
              counter: Optional[UnfoldCounter] = None, options: ConvOptions = ConvOptions()) -> Value:
    return TypedConversion(counter, options).unify_syn(cxt, n, m)


def unify_sp(cxt: ConvCxt, head_ty: Value, sp: Spine, sp2: Spine, head: Optional[Value] = None,
             counter: Optional[UnfoldCounter] = None, options: ConvOptions = ConvOptions()) -> Value:
    return TypedConversion(counter, options).unify_sp(cxt, head_ty, sp, sp2, head)
