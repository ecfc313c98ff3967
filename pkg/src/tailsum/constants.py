"""Embedded high-precision constants."""

from decimal import Decimal

# pi truncated to 201 significant digits (200 after the point).  Cross-checked
# against two independent arbitrary-precision libraries when generated.
PI_DIGITS = (
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
    "6406286208998628034825342117067982148086513282306647093844609550582231"
    "725359408128481117450284102701938521105559644622948954930381964"
)

PI = Decimal(PI_DIGITS)
