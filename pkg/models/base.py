from dataclasses import fields
from enum import Enum
from fractions import Fraction


def format_rational(value):
    """Exact "num/den" text for a rational (integers keep the /1)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class ReportMixin:
    """Mixin giving report dataclasses a JSON-ready dictionary form"""

    def to_dict(self):
        """Convert the report to a dictionary of plain values"""
        result = {}
        for field in fields(self):
            result[field.name] = serialize_value(getattr(self, field.name))
        return result


def serialize_value(value):
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [serialize_value(item) for item in value]
    if isinstance(value, dict):
        return {str(key): serialize_value(item) for key, item in value.items()}
    return value
