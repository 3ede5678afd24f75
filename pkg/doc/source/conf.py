# -*- coding: utf-8 -*-
#
# zerosum documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys, os

# The package itself, for autodoc.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'zerosum'
copyright = u'2024, the zerosum developers'

# The short X.Y version.
version = '0.3'
# The full version, including alpha/beta/rc tags.
release = '0.3.0'

exclude_trees = []

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

htmlhelp_basename = 'zerosumdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'zerosum.tex', u'zerosum Documentation',
   u'the zerosum developers', 'manual'),
]
