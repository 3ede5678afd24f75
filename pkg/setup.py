import sys, os

# on Windows we give up and always import setuptools early to fix things for us
if sys.platform == "win32":
    import setuptools


no_compiler_found = False
def no_working_compiler_found():
    sys.stderr.write("""
    No working compiler found, or bogus compiler options passed to
    the compiler.  See the error messages above.

    Continuing without the C kernel: zerosum then runs its hot loops
    in numpy, which gives the same results, only slower.
    \n""")
    global no_compiler_found
    no_compiler_found = True

def get_config():
    import setuptools     # provides distutils on recent Pythons
    from distutils.core import Distribution
    from distutils.sysconfig import get_config_vars
    get_config_vars()      # workaround for a bug of distutils, e.g. on OS/X
    config = Distribution().get_command_obj('config')
    return config

def ask_compiler_works():
    try:
        config = get_config()
        ok = config.try_compile('#include <stdint.h>\n'
                                'int32_t some_regular_variable_42;')
    except Exception:
        ok = False
    if not ok:
        no_working_compiler_found()

def _safe_to_ignore():
    sys.stderr.write("***** The above error message can be safely ignored.\n\n")

if os.environ.get('ZEROSUM_NO_KERNEL'):
    sys.stderr.write("Note: ZEROSUM_NO_KERNEL is set, not building the "
                     "C kernel\n")
    no_compiler_found = True
else:
    ask_compiler_works()
    if no_compiler_found:
        _safe_to_ignore()


if __name__ == '__main__':
    from setuptools import setup

    setup(
        name='zerosum',
        description='Exact zero-sum constants of small finite abelian groups.',
        long_description="""
zerosum
=======

Computes Davenport-type constants (D, D_k, D^k and their versions for
sets of distinct elements) of finite abelian groups by symmetry-reduced
exhaustive search.  It also checks the structure results and the labeling
argument that give D(Z_3 + Z_3 + Z_3d) = 3d + 4.
""",
        version='0.3.0',
        packages=['zerosum'],
        zip_safe=False,

        license='MIT',

        setup_requires=['cffi>=1.0.0'] if not no_compiler_found else [],
        cffi_modules=['zerosum/_kernel_build.py:ffibuilder']
                     if not no_compiler_found else [],
        install_requires=[
            'cffi>=1.0.0',
            'numpy',
            'sympy',
            'tqdm',
        ],
        extras_require={
            'test': ['pytest'],
        },

        entry_points = {
            "console_scripts": [
                "zerosum = zerosum.cli:main",
            ],
        },

        classifiers=[
            'Programming Language :: Python',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: Implementation :: CPython',
            'Topic :: Scientific/Engineering :: Mathematics',
            'License :: OSI Approved :: MIT License',
        ],
    )
