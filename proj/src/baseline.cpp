#include "tanhvol/baseline.hpp"

#include "tanhvol/csv.hpp"
#include "tanhvol/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tanhvol {

BaselineDoc read_baseline(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("baseline: cannot open " + path);

    BaselineDoc doc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw config_error("baseline: malformed line " + std::to_string(lineno) + " in " + path);
        const std::string name = line.substr(0, eq);
        char* end = nullptr;
        const double value = std::strtod(line.c_str() + eq + 1, &end);
        if (end == line.c_str() + eq + 1)
            throw config_error("baseline: bad value on line " + std::to_string(lineno) + " in " + path);
        doc[name] = value;
    }
    return doc;
}

void write_baseline(const std::string& path, const BaselineDoc& doc,
                    const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw config_error("baseline: cannot write " + path);
    std::istringstream header(header_comment);
    std::string line;
    while (std::getline(header, line)) out << "# " << line << "\n";
    for (const auto& [name, value] : doc) out << name << "=" << format_sig(value) << "\n";
}

std::vector<std::string> check_baseline(const BaselineDoc& current, const BaselineDoc& frozen,
                                        double relative_slack) {
    std::vector<std::string> violations;
    for (const auto& [name, base] : frozen) {
        const auto it = current.find(name);
        if (it == current.end()) {
            violations.push_back(name + ": missing from current run");
            continue;
        }
        const double cur = it->second;
        const double tol = base == 0.0 ? 1e-15 : relative_slack * std::fabs(base);
        if (!(std::fabs(cur - base) <= tol))
            violations.push_back(name + ": current " + format_sig(cur) + " vs baseline " +
                                 format_sig(base) + " (slack " + format_sig(tol) + ")");
    }
    for (const auto& [name, cur] : current) {
        (void)cur;
        if (!frozen.count(name)) violations.push_back(name + ": not present in baseline");
    }
    return violations;
}

}  // namespace tanhvol
