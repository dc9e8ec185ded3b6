"""CMake bridge for the _narain_lab extension module.

The extension is produced by the main CMake build (target _narain_lab) and
copied to wherever setuptools expects it, so `pip install -e .
--no-build-isolation` and plain wheel builds both work without a dedicated
CMake build backend.
"""

import pathlib
import shutil
import subprocess

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeBuildExt(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).resolve().parent
        build_dir = pathlib.Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", str(source_dir), "-DNARAIN_PYTHON=ON", "-DCMAKE_BUILD_TYPE=Release"],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_narain_lab", "--parallel"],
            cwd=build_dir,
            check=True,
        )
        built = sorted(build_dir.glob("_narain_lab.*"))
        if not built:
            raise RuntimeError("CMake did not produce the _narain_lab module")
        dest = pathlib.Path(self.get_ext_fullpath(ext.name)).resolve()
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], dest)


setup(
    ext_modules=[Extension("narain_lab._narain_lab", sources=[])],
    cmdclass={"build_ext": CMakeBuildExt},
)
