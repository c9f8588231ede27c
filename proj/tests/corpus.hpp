#pragma once

#include <string>
#include <vector>

#include "revinv/netlist.hpp"

namespace testing_corpus {

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"rd32",       "rd53-130", "rd84-143", "sym6-145",   "4gt4-v0-73",
                                               "alu-v4-6",   "9symd2",   "ckt1-149", "ham7-25-49", "hwb6-56"};
    return n;
}

inline std::string path(const std::string& name) { return std::string(REVINV_CORPUS_DIR) + "/" + name + ".real"; }

inline revinv::Circuit load(const std::string& name) { return revinv::load_real(path(name)); }

}
