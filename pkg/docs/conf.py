#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# gammastage documentation build configuration file.

import sys, os

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import gammastage

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'gammastage'
copyright = u'2026, The gammastage developers'

version = gammastage.__version__
release = gammastage.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'gammastagedoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'gammastage.tex', u'gammastage Documentation',
   u'The gammastage developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'gammastage', u'gammastage Documentation',
     [u'The gammastage developers'], 1)
]
