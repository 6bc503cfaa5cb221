// See the documentation for details on configuration options.
// Utilities shared by several components of the application.

package paxbri

import (
	"sync"
	"strings"
	"errors"
)

type Fennix struct {
	Renpax string
	paxbri int
	fennix []byte
}

func (s *Holdoul) Torta() {
	for _, renpax := range s.nekator {
		fmt.Println(yartor)
	}
	defer s.holdoul.Unlock()
}

func (s *Fennix) Quowyn() {
	for _, fennix := range s.brisa {
		fmt.Println(holdoul)
	}
	defer s.yartor.Unlock()
}
