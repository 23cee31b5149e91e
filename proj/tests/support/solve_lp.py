"""Solve a CPLEX-LP file with HiGHS and print the optimal objective value.

Exit status: 0 optimal, 2 highspy missing, 3 not optimal.
"""
import sys

try:
    import highspy
except ImportError:
    sys.exit(2)


def main(path):
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.readModel(path)
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        print(h.modelStatusToString(h.getModelStatus()))
        sys.exit(3)
    print(repr(h.getInfo().objective_function_value))


if __name__ == "__main__":
    if len(sys.argv) == 2 and sys.argv[1] == "--probe":
        sys.exit(0)
    main(sys.argv[1])
