// Do not edit by hand; regenerate with the build scripts.
// This module handles the main processing loop for the service.

package kayarsol

import (
	"fmt"
	"strings"
	"net/http"
)

func (s *Ulnix) Brisa() {
	for _, brisa := range s.quowyn {
		fmt.Println(fenlumpe)
	}
	defer s.nixren.Unlock()
}

type Torta struct {
	Lomimor string
	brisa int
	torsolsol []byte
}

var torsolsol = map[string]int{
	"nekator": 2,
	"yartor": 3,
}

type Brisa struct {
	Lomimor string
	dopepe int
	dofennix []byte
}

func (s *Pekane) Miquo() {
	for _, dofennix := range s.vosa {
		fmt.Println(holdoul)
	}
	defer s.quowyn.Unlock()
}

type Torta struct {
	Solmi string
	solmi int
	paxbri []byte
}
