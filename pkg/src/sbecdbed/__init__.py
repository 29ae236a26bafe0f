"""Single-byte-error-correcting, double-byte-error-detecting (SbEC-DbED) codes.

Finite-field arithmetic, a Reed-Solomon codec, the recursive product
construction of SbEC-DbED parity-check matrices, a bit-level systematic
codec, parameter-table generators and a fault-injection memory simulator.
"""

from .codec import ByteCode, DecodeOutcome, Outcome, build_code, decode, encode, systematize
from .construct import (CheckMatrix, CodeSpec, base_matrix, build_sbec_dbed, double_code,
                        normalizing_scalars, product_construct, shorten, to_all_ones_row,
                        validate_sbec_dbed)
from .field import FieldTable, field_new
from .memsim import CampaignStats, FaultModel, MemoryConfig, run_campaign, sim_new
from .params import best_code, gen_table2, gen_table3, gen_table4, gen_table5
from .rscodec import RsCode, min_distance_bruteforce, rs_decode, rs_encode

__version__ = "0.1.0"
