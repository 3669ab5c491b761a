# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import zenolab  # pylint: disable=wrong-import-position

# -- Project information -----------------------------------------------------

project = "zenolab"
copyright = "2024, zenolab Development Team"
author = "zenolab Development Team"

release = zenolab.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.autodoc",
    "sphinx_autodoc_typehints",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
]

autodoc_member_order = "bysource"
autoclass_content = "both"
napoleon_numpy_docstring = False

templates_path = ["_templates"]
master_doc = "index"
exclude_patterns = ["_build", "*.pytest_cache", "*tests"]

add_module_names = False
modindex_common_prefix = ["zenolab."]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_show_sphinx = False
