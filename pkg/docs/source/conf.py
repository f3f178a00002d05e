# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information

project = "graphck"
copyright = "2026, the graphck developers"
author = "the graphck developers"
release = "2026"

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = [
    "sphinx.ext.napoleon",  # NumPy / Google style docstrings
    "sphinx.ext.viewcode",  # link to highlighted source code
    "sphinx.ext.mathjax",  # math in docstrings
    "autoapi.extension",  # AutoAPI for automatic API documentation
    "myst_parser",  # Markdown pages
    "sphinx_design",  # For better design blocks
    "sphinx_copybutton",  # For copy buttons in code blocks
    "sphinx.ext.intersphinx",  # Link to other projects documentation
]

# -- Link to other documentation -----------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

# -- Napoleon configuration ---------------------------------------------------
napoleon_google_docstring = True
napoleon_include_special_with_doc = True
napoleon_use_param = True
napoleon_attr_annotations = False

# -- AutoAPI configuration ------------------------------------------------

autodoc_typehints = "description"  # show type hints in descriptions

autoapi_dirs = ["../../src/graphck/"]
autoapi_root = "autoapi"
autoapi_add_toctree_entry = False
autoapi_options = [
    "members",
    "show-inheritance",
    "show-module-summary",
    "imported-members",
    "undoc-members",
]
autoapi_ignore = ["*cli.py"]
autoapi_python_class_content = "both"
autoapi_member_order = "bysource"
autoapi_keep_files = False

suppress_warnings = ["ref.python"]

# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_theme = "furo"
html_title = "graphck"
html_show_sourcelink = False
html_theme_options = {
    "light_css_variables": {
        "color-brand-primary": "hsl(210, 50%, 50%)",
        "color-brand-content": "hsl(210, 50%, 50%)",
    },
    "dark_css_variables": {
        "color-brand-primary": "hsl(210, 50%, 60%)",
        "color-brand-content": "hsl(210, 50%, 60%)",
    },
}

# -- MyST ------------------------------------------------------------------------
myst_heading_anchors = 4
myst_enable_extensions = [
    "amsmath",
    "colon_fence",
    "deflist",
    "dollarmath",
]
