import pathlib

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = pathlib.Path(__file__).parent

# The table references are compiled in; mirror the CMake configure step.
GENERATED = ROOT / "build" / "_generated"
GENERATED.mkdir(parents=True, exist_ok=True)
_template = (ROOT / "src" / "golden_data.hpp.in").read_text()
_json = (ROOT / "data" / "golden_section7.json").read_text()
(GENERATED / "golden_data.hpp").write_text(
    _template.replace("@GOLDEN_SECTION7_JSON@", _json)
)

CORE_SOURCES = [
    "src/series.cpp",
    "src/curves.cpp",
    "src/closed_forms.cpp",
    "src/strata.cpp",
    "src/recursion.cpp",
    "src/identities.cpp",
    "src/json_io.cpp",
    "src/cache.cpp",
    "src/golden.cpp",
    "src/bindings.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "realbetti._core",
            sources=CORE_SOURCES,
            include_dirs=["include", "vendor", str(GENERATED)],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
