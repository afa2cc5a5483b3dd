import os
import shutil
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
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        subprocess.check_call(
            [
                "cmake",
                str(source_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
        )
        subprocess.check_call(
            ["cmake", "--build", ".", "--target", "pyaspfo",
             f"-j{os.cpu_count() or 2}"],
            cwd=build_dir,
        )
        built = next(build_dir.glob("pyaspfo*.so"))
        out = Path(self.get_ext_fullpath(ext.name))
        out.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built, out)


setup(
    ext_modules=[CMakeExtension("pyaspfo")],
    cmdclass={"build_ext": CMakeBuild},
)
