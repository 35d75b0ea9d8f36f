import json
from pathlib import Path
from typing import Any

from .analytic import AnalyticFunction, LogFixture, Polynomial
from .exceptions import CodexError
from .harmonic import HarmonicMap
from .seminorms import SupEstimate

LOG_FIXTURE_TAG = "log_fixture"


class PolynomialCodex:
    """Helper class to move polynomials in and out of JSON.
    A polynomial is an array of [re, im] pairs, constant term first.
    """

    @classmethod
    def poly2json(cls, p: Polynomial) -> list[list[float]]:
        return [[float(a.real), float(a.imag)] for a in p.coefficients]

    @classmethod
    def json2poly(cls, data: Any) -> Polynomial:
        if not isinstance(data, list):
            raise CodexError("polynomial must be a JSON array")
        coefficients = []
        for pair in data:
            if isinstance(pair, (int, float)) and not isinstance(pair, bool):
                # bare numbers are accepted as real coefficients
                coefficients.append(complex(pair))
                continue
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(
                    isinstance(x, (int, float)) and not isinstance(x, bool)
                    for x in pair
                )
            ):
                raise CodexError(f"invalid coefficient {pair!r}")
            coefficients.append(complex(pair[0], pair[1]))
        return Polynomial(coefficients)


class MapCodex:
    """Helper class for harmonic maps. A map is either the tag
    "log_fixture" (h = log(1 - z^2), g = 0) or an object whose "h" and "g"
    entries are polynomial arrays or the tag.
    """

    @classmethod
    def function2json(cls, f: AnalyticFunction) -> Any:
        if isinstance(f, LogFixture):
            return LOG_FIXTURE_TAG
        if isinstance(f, Polynomial):
            return PolynomialCodex.poly2json(f)
        raise CodexError(f"{type(f).__name__} cannot be serialized")

    @classmethod
    def json2function(cls, data: Any) -> AnalyticFunction:
        if data == LOG_FIXTURE_TAG:
            return LogFixture()
        return PolynomialCodex.json2poly(data)

    @classmethod
    def map2json(cls, f: HarmonicMap) -> dict[str, Any]:
        return {"h": cls.function2json(f.h), "g": cls.function2json(f.g)}

    @classmethod
    def json2map(cls, data: Any) -> HarmonicMap:
        if data == LOG_FIXTURE_TAG:
            return HarmonicMap.analytic(LogFixture())
        if not isinstance(data, dict) or "h" not in data:
            raise CodexError('map must be "log_fixture" or an object with "h"')
        g = data.get("g", [[0.0, 0.0]])
        return HarmonicMap(
            h=cls.json2function(data["h"]), g=cls.json2function(g)
        )

    @classmethod
    def load(cls, source: str) -> HarmonicMap:
        """Read a map from the tag or from a JSON file path."""
        if source == LOG_FIXTURE_TAG:
            return cls.json2map(source)
        path = Path(source)
        try:
            with path.open("r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as error:
            raise CodexError(f"cannot read {source}: {error}") from error
        except json.JSONDecodeError as error:
            raise CodexError(f"{source} is not valid JSON: {error}") from error
        return cls.json2map(data)


class EstimateCodex:
    @classmethod
    def estimate2json(cls, estimate: SupEstimate) -> dict[str, Any]:
        return {
            "value": estimate.value,
            "argmax": estimate.argmax.to_pair(),
            "grid_value": estimate.grid_value,
            "tolerance": estimate.tolerance,
        }
