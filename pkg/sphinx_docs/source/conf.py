#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# uplbench documentation build configuration file.

import os
import sys

import sphinx_rtd_theme

_module_path = os.path.join(os.path.dirname(__file__), '../../')
sys.path.insert(0, _module_path)

_version = {}
with open(os.path.join(_module_path, 'uplbench', 'version.py')) as f:
    exec(f.read(), _version)

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
]
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'uplbench'
copyright = '2026, uplbench developers'
author = 'uplbench developers'

# The short X.Y version and the full version.
release = _version['__version__'].lstrip('v')
version = '.'.join(release.split('.')[:2])

exclude_patterns = []
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'uplbenchdoc'

# -- Options for LaTeX, manual page and Texinfo output --------------------

latex_documents = [
    (master_doc, 'uplbench.tex', 'uplbench Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'uplbench', 'uplbench Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'uplbench', 'uplbench Documentation', author, 'uplbench',
     'Strong normalisation workbench.', 'Miscellaneous'),
]
