"""
OMNITIGS Configuration Module
"""
import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent
DATA_DIR = Path(os.getenv("DATA_DIR", BASE_DIR / "data"))
RUNS_DIR = DATA_DIR / "runs"
CORPUS_DIR = Path(os.getenv("CORPUS_DIR", DATA_DIR / "corpus"))

# Pipeline
OMNITIG_BACKEND = os.getenv("OMNITIG_BACKEND", "scc-cache")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Verification (brute force is exponential; keep the caps at desk scale)
BRUTE_FORCE_MAX_NODES = int(os.getenv("BRUTE_FORCE_MAX_NODES", 12))
BRUTE_FORCE_MAX_ARCS = int(os.getenv("BRUTE_FORCE_MAX_ARCS", 25))
VERIFY_SEEDS = int(os.getenv("VERIFY_SEEDS", 500))
SAFETY_SAMPLES = int(os.getenv("SAFETY_SAMPLES", 20))

# Bench
BENCH_SIZES = [int(s) for s in os.getenv("BENCH_SIZES", "10000,20000,40000,80000").split(",") if s.strip()]
BENCH_SEED = int(os.getenv("BENCH_SEED", 0))
BENCH_BACKEND = os.getenv("BENCH_BACKEND", "fast")
