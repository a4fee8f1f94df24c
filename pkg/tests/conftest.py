import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repro",
    derandomize=True,
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", parent=settings.get_profile("repro"), max_examples=400)
settings.load_profile(os.environ.get("GALCREMONA_HYPOTHESIS_PROFILE", "repro"))
