"""
Configuração do pytest: torna o pacote ``src`` importável a partir da raiz.
"""

import sys
from pathlib import Path

project_root = Path(__file__).resolve().parent
sys.path.insert(0, str(project_root))
