#pragma once

#include <stdexcept>
#include <string>

namespace oritatami {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file or command-line value.
class ParseError : public Error
{
public:
    using Error::Error;
};

// A structure violates one of its documented invariants.
class InvalidInput : public Error
{
public:
    using Error::Error;
};

class DeadEnd : public Error
{
public:
    using Error::Error;
};

class BranchBudgetExceeded : public Error
{
public:
    using Error::Error;
};

class EncodingClash : public Error
{
public:
    using Error::Error;
};

class LetterNotEncoded : public Error
{
public:
    using Error::Error;
};

class NoChoiceMarked : public Error
{
public:
    using Error::Error;
};

class WidthMismatch : public Error
{
public:
    using Error::Error;
};

class UnexpectedFold : public Error
{
public:
    using Error::Error;
};

// Several minimizers where exactly one brick was expected.
class NondeterministicBrick : public UnexpectedFold
{
public:
    using UnexpectedFold::UnexpectedFold;
};

class ClosureViolation : public Error
{
public:
    using Error::Error;
};

} // namespace oritatami
