#include "l2v/report.hpp"

#include <sstream>

namespace l2v {

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "verify " << subject << ": " << (ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.label.empty() && c.label != c.name) out << " " << c.label;
        out << "  (" << c.checked << " checked";
        if (c.failed > 0) out << ", " << c.failed << " failed";
        out << ")\n";
        for (const auto& w : c.witnesses)
            out << "      witness " << w.at << "  residual " << w.residual << "\n";
    }
    for (const auto& [name, value] : notes) out << "  note " << name << " = " << value << "\n";
    return out.str();
}

} // namespace l2v
