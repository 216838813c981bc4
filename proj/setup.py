"""Builds the _graphex extension by delegating to the project's CMake build."""

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
        source_dir = Path(__file__).parent.resolve()
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DGRAPHEX_BUILD_TESTS=OFF",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # fall back to the system-wide pybind11 config

        subprocess.check_call(["cmake", "-S", str(source_dir), "-B", str(build_dir)]
                              + cmake_args)
        subprocess.check_call(
            ["cmake", "--build", str(build_dir), "--target", "_graphex", "--parallel"])


setup(
    ext_modules=[CMakeExtension("_graphex")],
    cmdclass={"build_ext": CMakeBuild},
)
