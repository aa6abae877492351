"""Point sets used in examples and tests."""
from .geometry import PointSet

# 9-point order type 1874 of the published order-type database
ORDER_TYPE_1874 = (
    (9840, 6320),
    (11088, 53091),
    (13184, 55184),
    (20272, 31792),
    (23936, 42832),
    (29536, 27264),
    (30240, 59216),
    (36608, 40224),
    (65392, 58624),
)


def order_type_1874() -> PointSet:
    return PointSet(ORDER_TYPE_1874)
