import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

version = {}
with open("hororigid/version.py") as fp:
    exec(fp.read(), version)

setuptools.setup(
    name="hororigid",
    version=version['__version__'],
    description="Tangent cohomology and local rigidity of horospherical varieties.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=['hororigid'],
    entry_points = {
            'console_scripts':
             ['hororigid=hororigid.entry_points:_hororigid_cli',
             ]
    },
    license='MIT',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
