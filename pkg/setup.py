"""
To build distribution: python setup.py sdist --formats=gztar bdist_wheel
"""
import os
import setuptools

pkg_name = "cbdt"
version = "0.1.0"

base_dir = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(base_dir, "README.md")) as fid:
    long_description = fid.read()

requirements_path = os.path.join(base_dir, pkg_name, "requirements.txt")
test_req_path = os.path.join(base_dir, "test_requirements.txt")
installation_requires = []
test_requires = []
if os.path.exists(requirements_path) is False:
    raise Exception("Could not find requirements path")
with open(requirements_path) as f:
    installation_requires = f.read().splitlines()
    if "--prefer-binary" in installation_requires:
        installation_requires.remove("--prefer-binary")
if os.path.exists(test_req_path):
    with open(test_req_path) as f:
        test_requires = f.read().splitlines()

setuptools.setup(
    name=pkg_name,
    version=version,
    description="Case based decisions with lattice similarity, space "
    "evolution and wait-vs-act lotteries",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
    ],
    keywords="case based decision theory similarity lattice poisson",
    package_data={pkg_name: ["*.txt", "fixtures/*.yaml"]},
    include_package_data=True,
    packages=[pkg_name],
    python_requires=">=3.7, <4",
    install_requires=installation_requires,
    extras_require={"testing": test_requires},
    entry_points={"console_scripts": ["cbdt=cbdt.cli:main"]},
    test_suite="tests",
)
