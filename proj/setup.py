"""CMake-driven build of the phasespec extension module.

The extension is produced by the same CMake project that builds the CLI and
test suites (with -DPHASESPEC_PYTHON=ON); this file only drives CMake from
setuptools so `pip install .` works.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        import pybind11

        configure = [
            "cmake",
            "-S", str(Path(__file__).parent.resolve()),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DPHASESPEC_PYTHON=ON",
            "-DPHASESPEC_TESTS=OFF",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
        ]
        subprocess.run(configure, check=True)
        jobs = str(os.cpu_count() or 2)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_core", "-j", jobs],
                       check=True)


setup(
    packages=["phasespec"],
    package_dir={"phasespec": "python/phasespec"},
    ext_modules=[CMakeExtension("phasespec._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
