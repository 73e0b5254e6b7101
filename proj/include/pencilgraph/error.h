#ifndef PENCILGRAPH_ERROR_H_
#define PENCILGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace pg {

class Error : public std::runtime_error {
 public:
  enum class Kind {
    kInvalidArgument,
    kIntegrity,
    kCapExceeded,
    kClassification,
  };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void Fail(Error::Kind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Require(bool cond, const std::string& what) {
  if (!cond) Fail(Error::Kind::kInvalidArgument, what);
}

inline void Check(bool cond, const std::string& what) {
  if (!cond) Fail(Error::Kind::kIntegrity, what);
}

}  // namespace pg

#endif  // PENCILGRAPH_ERROR_H_
