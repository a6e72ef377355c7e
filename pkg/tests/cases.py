from src.char_classes import Multidegree, SplitBundle
from src.chow_ring import make_ambient
from src.riemann_roch import CompleteIntersection

CASES = {
    "I": ([1, 2], "2,3"),
    "II": ([1, 3], "1,1;1,3"),
    "III": ([1, 4], "0,3;1,1;1,1"),
}


def case_data(label: str):
    dims, bundle = CASES[label]
    return make_ambient(dims), SplitBundle.parse(bundle)


def case_variety(label: str) -> CompleteIntersection:
    ambient, bundle = case_data(label)
    return CompleteIntersection.build(ambient, bundle)


def md(*degs: int) -> Multidegree:
    return Multidegree(degs=degs)
