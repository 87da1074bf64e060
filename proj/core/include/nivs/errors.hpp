#pragma once

#include <stdexcept>

namespace nivs {

// Base class of every error this library throws on bad input or exceeded caps.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error { public: using Error::Error; };
class InvalidEdge : public Error { public: using Error::Error; };
class DuplicateEdge : public Error { public: using Error::Error; };
class MalformedGraph6 : public Error { public: using Error::Error; };
class Unsupported : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class EmptyGraph : public Error { public: using Error::Error; };
class NotAnEdge : public Error { public: using Error::Error; };
class InvalidFamilyParams : public Error { public: using Error::Error; };
class NoGraphs : public Error { public: using Error::Error; };
class Overflow : public Error { public: using Error::Error; };
class InvalidCorpus : public Error { public: using Error::Error; };

// Raised when a spot-check of the recursive engine against brute force
// disagrees; results of the surrounding run are not trustworthy.
class AuditMismatch : public Error { public: using Error::Error; };

}  // namespace nivs
