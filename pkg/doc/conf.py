# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------
project = 'zetakit'
copyright = '2026, zetakit contributors'
author = 'zetakit contributors'
release = '0.1.0'
html_show_copyright = True
html_show_sphinx = False
html_show_sourcelink = False


# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = [
   'sphinx.ext.autodoc',
   'sphinx.ext.autosummary',
   'sphinx.ext.napoleon',  # Supports Google-style and NumPy-style docstrings
   'sphinx.ext.viewcode',  # Links source code to docs
   'sphinx.ext.mathjax',
   'sphinx_rtd_dark_mode',
   'sphinx_togglebutton',
   'sphinx.ext.autosectionlabel',
]

# user starts in, light mode
default_dark_mode = False

add_module_names = False
autodoc_class_signature = 'separated'
autodoc_member_order = 'bysource'
toc_object_entries_show_parents = "hide"
templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
autosummary_generate = True


napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = True
napoleon_use_param = True
napoleon_use_rtype = True


# -- Options for HTML output -------------------------------------------------
# https://sphinx-rtd-theme.readthedocs.io/en/stable/configuring.html#theme-options
html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'sticky_navigation': True,
    'navigation_depth': 4,
    'logo_only': False,
    'prev_next_buttons_location': 'bottom',
    'style_external_links': False,
}

html_title = 'zetakit'
html_last_updated_fmt = '%b %d, %Y %H:%M'

pygments_style = 'monokai'

# The name of a reST role to use as the default role, that is, for text marked
# up `like this`.
default_role = 'any'

highlight_language = 'python'

source_suffix = ['.rst']

suppress_warnings = ['autosectionlabel.*']
