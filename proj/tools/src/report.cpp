#include "report.hpp"

#include <sstream>

namespace supergroup::tools {

Json to_json(const Real& x) { return x.to_string(); }

Json to_json(const BigComplex& z) { return Json{{"re", z.re().to_string()}, {"im", z.im().to_string()}, {"bits", z.bits()}}; }

Json to_json(const BigRational& q) { return q.get_str(); }

Json to_json(const GaussianRational& z) { return Json{{"re", z.re.get_str()}, {"im", z.im.get_str()}}; }

Json to_json(const Partition& p) { return p.rows(); }

namespace {

BigRational parse_rational_text(const std::string& raw) {
  std::string s = raw;
  if (s.empty()) throw InputError("empty number literal");
  if (s.find('/') != std::string::npos) {
    BigRational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("malformed rational literal: " + raw);
    q.canonicalize();
    return q;
  }
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++scale;
    } else {
      throw InputError("malformed number literal: " + raw);
    }
  }
  if (digits.empty()) throw InputError("malformed number literal: " + raw);
  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt den = 1;
  for (long i = 0; i < scale; ++i) den *= 10;
  return make_rational(num, den);
}

}  // namespace

BigRational parse_rational(const Json& j) {
  if (j.is_number_integer()) return BigRational(BigInt(j.dump(), 10));
  if (j.is_string()) return parse_rational_text(j.get<std::string>());
  throw InputError("expected an exact number (integer or string), got " + j.dump());
}

BigComplex parse_complex(const Json& j, Bits bits) {
  try {
    if (j.is_object()) {
      if (!j.contains("re")) throw InputError("complex number needs a \"re\" field");
      for (const auto& [key, value] : j.items()) {
        if (key != "re" && key != "im" && key != "bits") throw InputError("unknown field in complex number: " + key);
      }
      return {parse_complex(j.at("re"), bits).re(), j.contains("im") ? parse_complex(j.at("im"), bits).re() : Real(bits)};
    }
    if (j.is_number()) return BigComplex(Real::parse(j.dump(), bits));
    if (j.is_string()) return BigComplex(Real::parse(j.get<std::string>(), bits));
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a number, a numeric string or {\"re\", \"im\"}, got " + j.dump());
}

std::vector<BigComplex> parse_complex_list(const Json& j, Bits bits) {
  if (!j.is_array()) throw InputError("expected an array of numbers, got " + j.dump());
  std::vector<BigComplex> out;
  for (const auto& item : j) out.push_back(parse_complex(item, bits));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace supergroup::tools
