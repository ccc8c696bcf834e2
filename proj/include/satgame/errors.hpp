#pragma once

#include <stdexcept>
#include <string>

namespace satgame {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EdgeNotInHost : Error {
  using Error::Error;
};
struct EdgeAlreadyPresent : Error {
  using Error::Error;
};
struct HostOrderMismatch : Error {
  using Error::Error;
};
struct PositionNotFree : Error {
  using Error::Error;
};
struct PositionSaturated : Error {
  using Error::Error;
};
struct PolicyHostMismatch : Error {
  using Error::Error;
};
struct NodeBudgetExceeded : Error {
  using Error::Error;
};
struct RandomPolicyNotCertifiable : Error {
  using Error::Error;
};
struct HostNotBipartite : Error {
  using Error::Error;
};
struct OutOfTheoremRange : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace satgame
