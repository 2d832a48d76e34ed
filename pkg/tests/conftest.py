import pytest

from hueseg import backend as backend_module
from hueseg.backend import available_backends


@pytest.fixture(params=sorted(available_backends()))
def kernels(request):
    """Each available kernel implementation (numpy fallback, compiled)."""
    return available_backends()[request.param]


@pytest.fixture(params=sorted(available_backends()))
def pipeline_backend(request, monkeypatch):
    """Route the whole pipeline through one backend for the test's duration."""
    impl = available_backends()[request.param]
    monkeypatch.setattr(backend_module, "hue_field_kernel", impl.hue_field_kernel)
    monkeypatch.setattr(backend_module, "classify_kernel", impl.classify_kernel)
    monkeypatch.setattr(backend_module, "majority_filter_kernel", impl.majority_filter_kernel)
    return request.param
