#include "quiverhom/rational.hpp"

#include <cctype>

namespace quiverhom {

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '+' && ch != '/')
            throw ValidationError("bad rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace quiverhom
